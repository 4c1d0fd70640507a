#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace b3rep::quiver {

/// Dimension vector (a,b;x,y,z) for the bipartite quiver of Gamma = Z2 * Z3.
///
/// a, b are the multiplicities of the eigenvalues +1, -1 of X and x, y, z
/// those of the eigenvalues 1, w, w^2 of Y (w = exp(2 pi i / 3)). Both sides
/// sum to the representation dimension n.
class GammaDimVector {
 public:
  /// The zero vector.
  constexpr GammaDimVector() = default;

  /// Throws InvalidDimensionVector unless all entries are >= 0 and a+b = x+y+z.
  GammaDimVector(int a, int b, int x, int y, int z);

  [[nodiscard]] constexpr int a() const noexcept { return v_[0]; }
  [[nodiscard]] constexpr int b() const noexcept { return v_[1]; }
  [[nodiscard]] constexpr int x() const noexcept { return v_[2]; }
  [[nodiscard]] constexpr int y() const noexcept { return v_[3]; }
  [[nodiscard]] constexpr int z() const noexcept { return v_[4]; }
  [[nodiscard]] constexpr int n() const noexcept { return v_[0] + v_[1]; }

  [[nodiscard]] constexpr const std::array<int, 5>& entries() const noexcept { return v_; }

  friend GammaDimVector operator+(const GammaDimVector& lhs, const GammaDimVector& rhs);
  friend GammaDimVector operator*(int k, const GammaDimVector& v);

  friend constexpr auto operator<=>(const GammaDimVector&, const GammaDimVector&) = default;
  friend constexpr bool operator==(const GammaDimVector&, const GammaDimVector&) = default;

 private:
  std::array<int, 5> v_{};
};

/// Dimension vector for the hexagonal one-quiver, indexed by Z6.
///
/// Vertex u carries the one-dimensional simple with (X, Y) acting by
/// (1,1), (-1,w), (1,w^2), (-1,1), (1,w), (-1,w^2) for u = 0..5.
class HexDimVector {
 public:
  constexpr HexDimVector() = default;
  /// Throws InvalidDimensionVector on a negative entry.
  explicit HexDimVector(const std::array<int, 6>& h);

  /// Unit vector at vertex u (taken mod 6).
  static HexDimVector unit(int u);

  [[nodiscard]] int operator[](int i) const noexcept;  // index taken mod 6
  [[nodiscard]] constexpr const std::array<int, 6>& entries() const noexcept { return h_; }
  [[nodiscard]] int total() const noexcept;

  /// Rotates the hexagon: result[i] = h[i - k].
  [[nodiscard]] HexDimVector rotated(int k) const;

  friend constexpr auto operator<=>(const HexDimVector&, const HexDimVector&) = default;
  friend constexpr bool operator==(const HexDimVector&, const HexDimVector&) = default;

 private:
  std::array<int, 6> h_{};
};

std::ostream& operator<<(std::ostream& os, const GammaDimVector& v);
std::ostream& operator<<(std::ostream& os, const HexDimVector& h);
std::string to_string(const GammaDimVector& v);

// JSON: [a,b,x,y,z] and [h0,...,h5].
void to_json(nlohmann::json& j, const GammaDimVector& v);
void from_json(const nlohmann::json& j, GammaDimVector& v);
void to_json(nlohmann::json& j, const HexDimVector& h);
void from_json(const nlohmann::json& j, HexDimVector& h);

}  // namespace b3rep::quiver
