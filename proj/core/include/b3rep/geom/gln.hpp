#pragma once

#include <random>

#include "b3rep/rep/rep_pair.hpp"

namespace b3rep::geom {

/// G -> (G^3, G^2), landing in the component of commuting pairs.
/// Throws std::invalid_argument if G is not square or is singular.
[[nodiscard]] rep::RepPair gln_embed(const rep::Matrix& g);

/// (A, B) -> A B^{-1}, inverse of gln_embed on commuting pairs.
/// Throws NonCommutingPair when |AB - BA| > tol * max(1, |A| |B|).
[[nodiscard]] rep::Matrix gln_retract(const rep::RepPair& v, double tol = 1e-8);

/// U diag(s) V with Haar U, V and singular values s uniform in [1/2, 2],
/// so condition numbers stay below 4.
[[nodiscard]] rep::Matrix random_gln(int n, std::mt19937_64& rng);

}  // namespace b3rep::geom
