#pragma once

#include <random>
#include <vector>

#include "b3rep/rep/semisimple_spec.hpp"

namespace b3rep::geom {

/// Scalars used when sampling specs: sixth roots of unity so that cross
/// extensions occur, plus moduli 2 and 3/2 exp(2 pi i / 7) which fall
/// outside every mu_6 coset of 1.
[[nodiscard]] const std::vector<rep::ExactScalar>& sample_scalars();

/// Random valid spec of dimension between 1 and max_n. Reuses instance ids
/// and alphas often enough that twisted copies and multiplicities show up.
[[nodiscard]] rep::SemisimpleSpec random_spec(int max_n, std::mt19937_64& rng);

}  // namespace b3rep::geom
