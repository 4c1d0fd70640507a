#pragma once

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

namespace b3rep::rep {

using Matrix = Eigen::MatrixXcd;

/// Which defining relation a pair is meant to satisfy.
enum class RelationKind {
  Gamma,  // A^2 = B^3 = 1
  B3,     // A^2 = B^3
};

[[nodiscard]] const char* to_string(RelationKind kind) noexcept;

/// Images of the generators X, Y of B3 (or of Gamma) as complex n x n matrices.
struct RepPair {
  Matrix A;
  Matrix B;
  RelationKind kind = RelationKind::B3;

  [[nodiscard]] Eigen::Index n() const noexcept { return A.rows(); }
};

/// Residuals from validate_rep. For Gamma the residuals are |A^2 - I| and
/// |B^3 - I|; for B3 both fields hold |A^2 - B^3| (Frobenius norms).
struct RepValidation {
  bool ok = false;
  double residual_a = 0.0;
  double residual_b = 0.0;
  double min_singular_value = 0.0;
};

/// Checks invertibility and the requested relation at tolerance tol.
/// Gamma: residuals <= tol * n. B3: |A^2 - B^3| <= tol * max(|A^2|, |B^3|).
[[nodiscard]] RepValidation validate_rep(const RepPair& v, RelationKind kind, double tol = 1e-8);

/// Block-diagonal direct sum.
[[nodiscard]] RepPair direct_sum(const RepPair& lhs, const RepPair& rhs);

// JSON export: {"n":..,"kind":"B3","A":[[[re,im],...],...],"B":...}, row-major.
void to_json(nlohmann::json& j, const RepPair& v);
void from_json(const nlohmann::json& j, RepPair& v);

}  // namespace b3rep::rep
