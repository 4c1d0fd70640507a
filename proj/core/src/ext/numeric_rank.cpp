#include "b3rep/ext/numeric_rank.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace b3rep::ext {

void ToleranceConfig::validate() const {
  if (!(abs_floor > 0.0 && abs_floor < rel_tol && rel_tol < 1.0)) {
    throw std::invalid_argument("tolerance config needs 0 < abs_floor < rel_tol < 1");
  }
}

ToleranceConfig ToleranceConfig::with_rel_tol(double rel_tol) {
  ToleranceConfig cfg;
  cfg.rel_tol = rel_tol;
  cfg.abs_floor = std::min(1e-12, rel_tol * 1e-4);
  cfg.validate();
  return cfg;
}

RankInfo numeric_rank(const Eigen::MatrixXcd& m, const ToleranceConfig& tol) {
  RankInfo info;
  info.margin = std::numeric_limits<double>::infinity();
  if (m.rows() == 0 || m.cols() == 0) {
    info.kernel_dim = m.cols();
    return info;
  }
  // BDCSVD in Eigen 3.4.0 mis-deflates clustered singular values here.
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  info.sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  if (info.sigma_max < tol.abs_floor) {
    info.kernel_dim = m.cols();
    return info;
  }
  info.threshold = tol.rel_tol * info.sigma_max;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    const double s = sv(i);
    if (s > info.threshold) ++info.rank;
    const double ratio = s > 0.0 ? std::max(s / info.threshold, info.threshold / s)
                                 : std::numeric_limits<double>::infinity();
    info.margin = std::min(info.margin, ratio);
  }
  info.ambiguous = info.margin <= 10.0;
  info.kernel_dim = m.cols() - info.rank;
  return info;
}

long numeric_kernel_dim(const Eigen::MatrixXcd& m, const ToleranceConfig& tol) {
  return numeric_rank(m, tol).kernel_dim;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs) {
  Eigen::MatrixXcd out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
  for (Eigen::Index i = 0; i < lhs.rows(); ++i) {
    for (Eigen::Index j = 0; j < lhs.cols(); ++j) {
      out.block(i * rhs.rows(), j * rhs.cols(), rhs.rows(), rhs.cols()) = lhs(i, j) * rhs;
    }
  }
  return out;
}

}  // namespace b3rep::ext
