#pragma once

namespace b3rep::ext {

/// Singular values above rel_tol * sigma_max count toward the rank; a matrix
/// whose sigma_max is below abs_floor is treated as the zero map.
struct ToleranceConfig {
  double rel_tol = 1e-8;
  double abs_floor = 1e-12;

  /// Throws std::invalid_argument unless 0 < abs_floor < rel_tol < 1.
  void validate() const;

  /// Config with the given rel_tol and an abs_floor kept strictly below it.
  static ToleranceConfig with_rel_tol(double rel_tol);
};

}  // namespace b3rep::ext
