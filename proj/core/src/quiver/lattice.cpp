#include "b3rep/quiver/lattice.hpp"

#include <algorithm>
#include <set>

#include "b3rep/errors.hpp"

namespace b3rep::quiver {

namespace {

constexpr EulerMatrixHex kEulerHex = {{
    {1, -1, 0, 0, 0, -1},
    {-1, 1, -1, 0, 0, 0},
    {0, -1, 1, -1, 0, 0},
    {0, 0, -1, 1, -1, 0},
    {0, 0, 0, -1, 1, -1},
    {-1, 0, 0, 0, -1, 1},
}};

bool in_orbit_of(const GammaDimVector& alpha, const GammaDimVector& seed) {
  for (int k = 0; k < 6; ++k) {
    if (twist_gamma(seed, k) == alpha) return true;
  }
  return false;
}

void require_simple(const GammaDimVector& alpha) {
  if (!is_simple_gamma(alpha)) {
    throw NotSimpleDimension("dimension vector " + to_string(alpha) + " is not simple");
  }
}

}  // namespace

const EulerMatrixHex& euler_matrix_hex() noexcept { return kEulerHex; }

GammaDimVector hex_to_gamma(const HexDimVector& h) {
  return {h[0] + h[2] + h[4], h[1] + h[3] + h[5], h[0] + h[3], h[1] + h[4], h[2] + h[5]};
}

int euler_hex(const HexDimVector& h1, const HexDimVector& h2) {
  int sum = 0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      sum += h1[i] * kEulerHex[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * h2[j];
    }
  }
  return sum;
}

int euler_gamma(const GammaDimVector& lhs, const GammaDimVector& rhs) {
  int vertices = 0;
  for (std::size_t i = 0; i < 5; ++i) vertices += lhs.entries()[i] * rhs.entries()[i];
  return vertices - lhs.n() * rhs.n();
}

bool is_simple_gamma(const GammaDimVector& alpha) {
  if (alpha.n() == 0) return false;
  if (alpha.x() > 0 && alpha.y() > 0 && alpha.z() > 0) {
    return std::max({alpha.x(), alpha.y(), alpha.z()}) <= std::min(alpha.a(), alpha.b());
  }
  return in_orbit_of(alpha, GammaDimVector(1, 0, 1, 0, 0)) ||
         in_orbit_of(alpha, GammaDimVector(1, 1, 1, 1, 0));
}

bool is_simple_hex(const HexDimVector& h) {
  if (h.total() == 0) return false;
  for (int k = 0; k < 6; ++k) {
    if (h == HexDimVector::unit(k)) return true;
  }
  for (int i = 0; i < 6; ++i) {
    if (h[i] > h[i - 1] + h[i + 1]) return false;
  }
  int support = 0;
  for (int i = 0; i < 6; ++i) support += h[i] > 0 ? 1 : 0;
  if (support == 2) {
    // Condition (h_i <= neighbours) already forces the two support vertices
    // to be adjacent; only the (1,1) edge survives.
    const HexDimVector edge({1, 1, 0, 0, 0, 0});
    for (int k = 0; k < 6; ++k) {
      if (h == edge.rotated(k)) return true;
    }
    return false;
  }
  return true;
}

GammaDimVector twist_gamma(const GammaDimVector& alpha, int k) {
  const int steps = ((k % 6) + 6) % 6;
  GammaDimVector out = alpha;
  for (int s = 0; s < steps; ++s) {
    out = GammaDimVector(out.b(), out.a(), out.z(), out.x(), out.y());
  }
  return out;
}

GammaDimVector orbit_class(const GammaDimVector& alpha) {
  GammaDimVector best = alpha;
  for (int k = 1; k < 6; ++k) best = std::min(best, twist_gamma(alpha, k));
  return best;
}

int ext_gamma_self(const GammaDimVector& alpha) {
  require_simple(alpha);
  return 1 - euler_gamma(alpha, alpha);
}

int ext_gamma_pair(const GammaDimVector& alpha, const GammaDimVector& beta) {
  require_simple(alpha);
  require_simple(beta);
  return -euler_gamma(alpha, beta);
}

std::vector<GammaDimVector> enumerate_gamma(int n) {
  std::vector<GammaDimVector> out;
  if (n < 0) return out;
  for (int a = 0; a <= n; ++a) {
    for (int x = 0; x <= n; ++x) {
      for (int y = 0; x + y <= n; ++y) {
        out.emplace_back(a, n - a, x, y, n - x - y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GammaDimVector> enumerate_simple_gamma(int n) {
  std::vector<GammaDimVector> out;
  for (const auto& alpha : enumerate_gamma(n)) {
    if (is_simple_gamma(alpha)) out.push_back(alpha);
  }
  return out;
}

std::vector<GammaDimVector> simple_orbit_classes(int n) {
  std::set<GammaDimVector> classes;
  for (const auto& alpha : enumerate_simple_gamma(n)) classes.insert(orbit_class(alpha));
  return {classes.begin(), classes.end()};
}

std::vector<HexDimVector> enumerate_hex(int max_total) {
  std::vector<HexDimVector> out;
  std::array<int, 6> h{};
  // Odometer over the simplex sum(h) <= max_total.
  while (true) {
    out.emplace_back(h);
    std::size_t i = 0;
    while (i < 6) {
      ++h[i];
      int sum = 0;
      for (int e : h) sum += e;
      if (sum <= max_total) break;
      h[i] = 0;
      ++i;
    }
    if (i == 6) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace b3rep::quiver
