#include "b3rep/quiver/dim_vector.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "b3rep/errors.hpp"

namespace b3rep::quiver {

GammaDimVector::GammaDimVector(int a, int b, int x, int y, int z) : v_{a, b, x, y, z} {
  if (std::any_of(v_.begin(), v_.end(), [](int e) { return e < 0; })) {
    throw InvalidDimensionVector("dimension vector " + to_string(*this) + " has a negative entry");
  }
  if (a + b != x + y + z) {
    throw InvalidDimensionVector("dimension vector " + to_string(*this) +
                                 " violates a+b = x+y+z");
  }
}

GammaDimVector operator+(const GammaDimVector& lhs, const GammaDimVector& rhs) {
  return {lhs.a() + rhs.a(), lhs.b() + rhs.b(), lhs.x() + rhs.x(), lhs.y() + rhs.y(),
          lhs.z() + rhs.z()};
}

GammaDimVector operator*(int k, const GammaDimVector& v) {
  return {k * v.a(), k * v.b(), k * v.x(), k * v.y(), k * v.z()};
}

HexDimVector::HexDimVector(const std::array<int, 6>& h) : h_(h) {
  if (std::any_of(h_.begin(), h_.end(), [](int e) { return e < 0; })) {
    std::ostringstream os;
    os << *this;
    throw InvalidDimensionVector("hex dimension vector " + os.str() + " has a negative entry");
  }
}

HexDimVector HexDimVector::unit(int u) {
  std::array<int, 6> h{};
  h[static_cast<std::size_t>(((u % 6) + 6) % 6)] = 1;
  return HexDimVector(h);
}

int HexDimVector::operator[](int i) const noexcept {
  return h_[static_cast<std::size_t>(((i % 6) + 6) % 6)];
}

int HexDimVector::total() const noexcept { return std::accumulate(h_.begin(), h_.end(), 0); }

HexDimVector HexDimVector::rotated(int k) const {
  std::array<int, 6> out{};
  for (int i = 0; i < 6; ++i) out[static_cast<std::size_t>(i)] = (*this)[i - k];
  return HexDimVector(out);
}

std::ostream& operator<<(std::ostream& os, const GammaDimVector& v) {
  return os << '(' << v.a() << ',' << v.b() << ';' << v.x() << ',' << v.y() << ',' << v.z()
            << ')';
}

std::ostream& operator<<(std::ostream& os, const HexDimVector& h) {
  os << '(';
  for (std::size_t i = 0; i < 6; ++i) os << (i ? "," : "") << h.entries()[i];
  return os << ')';
}

std::string to_string(const GammaDimVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void to_json(nlohmann::json& j, const GammaDimVector& v) { j = v.entries(); }

void from_json(const nlohmann::json& j, GammaDimVector& v) {
  if (!j.is_array() || j.size() != 5) {
    throw ParseError("GammaDimVector must be a JSON array [a,b,x,y,z]");
  }
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("GammaDimVector entries must be integers");
  }
  v = GammaDimVector(j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>(),
                     j[4].get<int>());
}

void to_json(nlohmann::json& j, const HexDimVector& h) { j = h.entries(); }

void from_json(const nlohmann::json& j, HexDimVector& h) {
  if (!j.is_array() || j.size() != 6) {
    throw ParseError("HexDimVector must be a JSON array [h0,...,h5]");
  }
  std::array<int, 6> raw{};
  for (std::size_t i = 0; i < 6; ++i) {
    if (!j[i].is_number_integer()) throw ParseError("HexDimVector entries must be integers");
    raw[i] = j[i].get<int>();
  }
  h = HexDimVector(raw);
}

}  // namespace b3rep::quiver
