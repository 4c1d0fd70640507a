#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "b3rep/ext/tolerance.hpp"
#include "b3rep/quiver/dim_vector.hpp"
#include "b3rep/rep/exact_scalar.hpp"
#include "b3rep/rep/rep_pair.hpp"
#include "b3rep/rep/semisimple_spec.hpp"

namespace b3rep::rep {

/// Number of fresh seeds random_simple_gamma tries before giving up.
inline constexpr int kSimpleRetryBound = 16;

/// The 1x1 Gamma-representation at hexagon vertex u (0..5).
/// Throws std::out_of_range otherwise.
[[nodiscard]] RepPair one_dim_rep(int u);

/// Haar-distributed n x n unitary.
[[nodiscard]] Matrix random_unitary(Eigen::Index n, std::mt19937_64& rng);

struct SimpleInstance {
  quiver::GammaDimVector alpha;
  std::uint64_t seed = 0;  // seed that produced the accepted pair
  RepPair rep;
  std::string instance_id;
  int attempts = 1;
};

/// A = P diag(I_a, -I_b) P^*, B = Q diag(I_x, w I_y, w^2 I_z) Q^* with P, Q
/// Haar-like unitaries drawn from rng. Simple only for generic draws of a
/// simple alpha.
[[nodiscard]] RepPair random_gamma_point(const quiver::GammaDimVector& alpha, std::mt19937_64& rng);

/// Generic simple Gamma-module of type alpha, deterministic in seed.
/// Throws NotSimpleDimension or GenerationFailed.
[[nodiscard]] SimpleInstance random_simple_gamma(const quiver::GammaDimVector& alpha,
                                                 std::uint64_t seed,
                                                 const ext::ToleranceConfig& tol = {});

struct BurnsideResult {
  bool simple = false;
  long span_dim = 0;
  bool ambiguous = false;  // a singular value sat near the threshold
};

/// Simplicity oracle: grows the span of words in A, B until it stabilises and
/// compares its numerical dimension with n^2.
[[nodiscard]] BurnsideResult burnside_check(const RepPair& v, const ext::ToleranceConfig& tol = {});
[[nodiscard]] bool burnside_simple(const RepPair& v, const ext::ToleranceConfig& tol = {});

/// (lambda^3 A, lambda^2 B). Keeps the Gamma tag only when lambda^6 = 1.
[[nodiscard]] RepPair scale_rep(const RepPair& v, const ExactScalar& lambda);

/// Stable 64-bit FNV-1a hash used to derive per-instance seeds.
[[nodiscard]] std::uint64_t stable_hash(const std::string& text) noexcept;

/// Seed used for an entry's underlying Gamma-simple.
[[nodiscard]] std::uint64_t instance_seed(std::uint64_t seed, const std::string& instance_id) noexcept;

/// Block-diagonal model of the spec. Entries with the same instance id and
/// alpha share the same Gamma-simple block. Throws InvalidSpec if the spec is
/// invalid, GenerationFailed on generator failure.
[[nodiscard]] RepPair assemble(const SemisimpleSpec& spec, std::uint64_t seed,
                               const ext::ToleranceConfig& tol = {});

}  // namespace b3rep::rep
