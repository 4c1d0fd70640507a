#include "b3rep/rep/rep_pair.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "b3rep/errors.hpp"

namespace b3rep::rep {

const char* to_string(RelationKind kind) noexcept {
  return kind == RelationKind::Gamma ? "Gamma" : "B3";
}

RepValidation validate_rep(const RepPair& v, RelationKind kind, double tol) {
  RepValidation out;
  const Eigen::Index n = v.n();
  if (n == 0 || v.A.cols() != n || v.B.rows() != n || v.B.cols() != n) return out;

  const Eigen::JacobiSVD<Matrix> svd_a(v.A);
  const Eigen::JacobiSVD<Matrix> svd_b(v.B);
  out.min_singular_value =
      std::min(svd_a.singularValues()(n - 1), svd_b.singularValues()(n - 1));

  const Matrix a2 = v.A * v.A;
  const Matrix b3 = v.B * v.B * v.B;
  bool relation_ok = false;
  if (kind == RelationKind::Gamma) {
    const Matrix id = Matrix::Identity(n, n);
    out.residual_a = (a2 - id).norm();
    out.residual_b = (b3 - id).norm();
    const double bound = tol * static_cast<double>(n);
    relation_ok = out.residual_a <= bound && out.residual_b <= bound;
  } else {
    out.residual_a = out.residual_b = (a2 - b3).norm();
    relation_ok = out.residual_a <= tol * std::max(a2.norm(), b3.norm());
  }
  out.ok = relation_ok && out.min_singular_value > tol;
  return out;
}

RepPair direct_sum(const RepPair& lhs, const RepPair& rhs) {
  const Eigen::Index n1 = lhs.n();
  const Eigen::Index n2 = rhs.n();
  RepPair out;
  out.A = Matrix::Zero(n1 + n2, n1 + n2);
  out.B = Matrix::Zero(n1 + n2, n1 + n2);
  out.A.topLeftCorner(n1, n1) = lhs.A;
  out.A.bottomRightCorner(n2, n2) = rhs.A;
  out.B.topLeftCorner(n1, n1) = lhs.B;
  out.B.bottomRightCorner(n2, n2) = rhs.B;
  out.kind = (lhs.kind == RelationKind::Gamma && rhs.kind == RelationKind::Gamma)
                 ? RelationKind::Gamma
                 : RelationKind::B3;
  return out;
}

namespace {

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, Eigen::Index n) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n) {
    throw ParseError("matrix must have n rows");
  }
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ParseError("matrix rows must have n entries");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& e = row[static_cast<std::size_t>(k)];
      if (!e.is_array() || e.size() != 2) throw ParseError("matrix entries must be [re,im]");
      m(i, k) = {e[0].get<double>(), e[1].get<double>()};
    }
  }
  return m;
}

}  // namespace

void to_json(nlohmann::json& j, const RepPair& v) {
  j = nlohmann::json{{"n", v.n()},
                     {"kind", to_string(v.kind)},
                     {"A", matrix_to_json(v.A)},
                     {"B", matrix_to_json(v.B)}};
}

void from_json(const nlohmann::json& j, RepPair& v) {
  const auto n = j.at("n").get<Eigen::Index>();
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "Gamma" && kind != "B3") throw ParseError("kind must be \"Gamma\" or \"B3\"");
  v.kind = kind == "Gamma" ? RelationKind::Gamma : RelationKind::B3;
  v.A = matrix_from_json(j.at("A"), n);
  v.B = matrix_from_json(j.at("B"), n);
}

}  // namespace b3rep::rep
