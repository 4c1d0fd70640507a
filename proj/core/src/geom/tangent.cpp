#include "b3rep/geom/tangent.hpp"

#include <stdexcept>
#include <string>

#include "b3rep/errors.hpp"

namespace b3rep::geom {

Eigen::MatrixXcd tangent_jacobian(const rep::RepPair& v) {
  using ext::kron;
  const Eigen::Index n = v.n();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd& a = v.A;
  const Eigen::MatrixXcd& b = v.B;
  const Eigen::MatrixXcd b2 = b * b;
  Eigen::MatrixXcd jac(n * n, 2 * n * n);
  jac << kron(a.transpose(), id) + kron(id, a),
      -(kron(b2.transpose(), id) + kron(b.transpose(), b) + kron(id, b2));
  return jac;
}

long tangent_dim_numeric(const rep::RepPair& v, const ext::ToleranceConfig& tol) {
  if (!rep::validate_rep(v, rep::RelationKind::B3).ok) {
    throw std::invalid_argument("tangent_dim_numeric needs a point of rep_n B3");
  }
  const ext::RankInfo info = ext::numeric_rank(tangent_jacobian(v), tol);
  if (info.ambiguous) {
    throw ToleranceAmbiguity("Jacobian singular value within a factor " + std::to_string(info.margin) +
                             " of the rank threshold");
  }
  return 2 * v.n() * v.n() - info.rank;
}

}  // namespace b3rep::geom
