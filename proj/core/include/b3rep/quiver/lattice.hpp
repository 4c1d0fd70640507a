#pragma once

#include <array>
#include <vector>

#include "b3rep/quiver/dim_vector.hpp"

namespace b3rep::quiver {

/// Euler matrix of the hexagonal one-quiver: 1 on the diagonal, -1 between
/// cyclically adjacent vertices, 0 elsewhere.
using EulerMatrixHex = std::array<std::array<int, 6>, 6>;
[[nodiscard]] const EulerMatrixHex& euler_matrix_hex() noexcept;

[[nodiscard]] GammaDimVector hex_to_gamma(const HexDimVector& h);

[[nodiscard]] int euler_hex(const HexDimVector& h1, const HexDimVector& h2);

/// Euler form of the bipartite quiver: sum of vertex products minus n_a * n_b.
[[nodiscard]] int euler_gamma(const GammaDimVector& lhs, const GammaDimVector& rhs);

/// True iff rep_alpha(Gamma) contains simple representations.
///
/// With x, y, z all positive the criterion is max{x,y,z} <= min{a,b};
/// otherwise alpha must be a twist of (1,0;1,0,0) or (1,1;1,1,0).
[[nodiscard]] bool is_simple_gamma(const GammaDimVector& alpha);

/// Hexagon criterion: h_i <= h_{i-1} + h_{i+1} for all i, with the orbits of
/// e_0 and (1,1,0,0,0,0) as the only admissible small supports.
[[nodiscard]] bool is_simple_hex(const HexDimVector& h);

/// Effect of t = exp(i pi k / 3) acting by t.(A,B) = (t^3 A, t^2 B) on
/// eigenvalue multiplicities. One step swaps (a,b) and sends (x,y,z) to (z,x,y).
[[nodiscard]] GammaDimVector twist_gamma(const GammaDimVector& alpha, int k);

/// Lexicographically smallest member of the Z6-orbit of alpha.
[[nodiscard]] GammaDimVector orbit_class(const GammaDimVector& alpha);

/// dim Ext^1_Gamma(S,S) for a simple S of type alpha, i.e. 1 - chi(alpha,alpha).
/// Throws NotSimpleDimension on non-simple input.
[[nodiscard]] int ext_gamma_self(const GammaDimVector& alpha);

/// dim Ext^1_Gamma(S,T) for non-isomorphic simples S, T, i.e. -chi(alpha,beta).
/// The caller vouches for non-isomorphism; only simplicity of the vectors is
/// checked.
[[nodiscard]] int ext_gamma_pair(const GammaDimVector& alpha, const GammaDimVector& beta);

/// All simple alpha of dimension n in lexicographic order.
[[nodiscard]] std::vector<GammaDimVector> enumerate_simple_gamma(int n);

/// Distinct orbit classes of enumerate_simple_gamma(n), lexicographic.
[[nodiscard]] std::vector<GammaDimVector> simple_orbit_classes(int n);

/// Every valid GammaDimVector of dimension n, simple or not, lexicographic.
[[nodiscard]] std::vector<GammaDimVector> enumerate_gamma(int n);

/// Every hex vector with entry sum at most max_total.
[[nodiscard]] std::vector<HexDimVector> enumerate_hex(int max_total);

}  // namespace b3rep::quiver
