#pragma once

#include "b3rep/ext/numeric_rank.hpp"
#include "b3rep/rep/rep_pair.hpp"

namespace b3rep::geom {

/// Matrix of the linearised relation (dA, dB) -> dA A + A dA - (dB B^2 + B dB B + B^2 dB).
[[nodiscard]] Eigen::MatrixXcd tangent_jacobian(const rep::RepPair& v);

/// 2n^2 - rank of the Jacobian. Throws ToleranceAmbiguity near the threshold
/// and std::invalid_argument when v fails the B3 relation.
[[nodiscard]] long tangent_dim_numeric(const rep::RepPair& v, const ext::ToleranceConfig& tol = {});

}  // namespace b3rep::geom
