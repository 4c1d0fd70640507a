#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <boost/rational.hpp>
#include <nlohmann/json_fwd.hpp>

namespace b3rep::rep {

using Rational = boost::rational<std::int64_t>;

/// Parses "p", "p/q" or "-p/q". Throws ParseError.
[[nodiscard]] Rational parse_rational(const std::string& text);
[[nodiscard]] std::string format_rational(const Rational& r);

/// Nonzero complex number r * exp(2 pi i q) with rational modulus r > 0 and
/// rational turn q in [0,1). Membership of ratios in the sixth roots of unity
/// is decided exactly on (r, q).
class ExactScalar {
 public:
  /// The scalar 1.
  ExactScalar() = default;
  /// Throws std::invalid_argument unless modulus > 0. The turn is reduced mod 1.
  ExactScalar(Rational modulus, Rational turn);

  static ExactScalar one() { return {}; }
  /// zeta_6^k = exp(i pi k / 3).
  static ExactScalar root_of_unity6(int k);
  static ExactScalar real(Rational modulus) { return {modulus, Rational(0)}; }

  [[nodiscard]] const Rational& modulus() const noexcept { return r_; }
  [[nodiscard]] const Rational& turn() const noexcept { return q_; }

  [[nodiscard]] ExactScalar pow(int k) const;
  [[nodiscard]] ExactScalar inverse() const;
  [[nodiscard]] bool is_sixth_root_of_unity() const;

  /// If this scalar equals zeta_6^k, returns k in 0..5.
  [[nodiscard]] std::optional<int> mu6_exponent() const;

  [[nodiscard]] std::complex<double> to_complex() const;

  friend ExactScalar operator*(const ExactScalar& lhs, const ExactScalar& rhs);
  friend ExactScalar operator/(const ExactScalar& lhs, const ExactScalar& rhs);
  friend bool operator==(const ExactScalar& lhs, const ExactScalar& rhs) = default;

 private:
  Rational r_{1};
  Rational q_{0};
};

/// True iff lambda / mu lies in mu_6.
[[nodiscard]] bool ratio_in_mu6(const ExactScalar& lambda, const ExactScalar& mu);

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

// JSON: {"r":"p/q","q":"p/q"}.
void to_json(nlohmann::json& j, const ExactScalar& s);
void from_json(const nlohmann::json& j, ExactScalar& s);

}  // namespace b3rep::rep
