#pragma once

#include <Eigen/Dense>

#include "b3rep/ext/tolerance.hpp"

namespace b3rep::ext {

/// Outcome of a thresholded SVD rank computation.
struct RankInfo {
  long rank = 0;
  long kernel_dim = 0;  // #columns - rank
  double sigma_max = 0.0;
  double threshold = 0.0;
  /// Ratio of the nearest singular value to the threshold, folded so that
  /// values >= 1 (1 means "on the threshold"). Infinity when no singular value
  /// exists.
  double margin = 0.0;
  /// Some singular value lies within a factor 10 of the threshold.
  bool ambiguous = false;
};

[[nodiscard]] RankInfo numeric_rank(const Eigen::MatrixXcd& m, const ToleranceConfig& tol = {});

/// Dimension of the numerical kernel: #columns minus the number of singular
/// values above rel_tol * sigma_max (zero when sigma_max < abs_floor).
[[nodiscard]] long numeric_kernel_dim(const Eigen::MatrixXcd& m, const ToleranceConfig& tol = {});

/// Kronecker product, used to vectorise Sylvester-type maps: with column-major
/// vec, vec(L X R) = kron(R^T, L) vec(X).
[[nodiscard]] Eigen::MatrixXcd kron(const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs);

}  // namespace b3rep::ext
