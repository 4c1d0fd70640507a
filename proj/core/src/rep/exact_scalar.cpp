#include "b3rep/rep/exact_scalar.hpp"

#include <charconv>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "b3rep/errors.hpp"

namespace b3rep::rep {

namespace {

Rational reduce_turn(Rational q) {
  // floor(q) for rationals with positive denominator
  std::int64_t fl = q.numerator() / q.denominator();
  if (q.numerator() < 0 && q.numerator() % q.denominator() != 0) --fl;
  return q - Rational(fl);
}

std::int64_t parse_int(std::string_view text, const std::string& whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("malformed rational \"" + whole + "\"");
  }
  return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, text));
  const std::string_view sv(text);
  const std::int64_t num = parse_int(sv.substr(0, slash), text);
  const std::int64_t den = parse_int(sv.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ExactScalar::ExactScalar(Rational modulus, Rational turn) : r_(modulus), q_(reduce_turn(turn)) {
  if (r_ <= Rational(0)) throw std::invalid_argument("ExactScalar modulus must be positive");
}

ExactScalar ExactScalar::root_of_unity6(int k) { return {Rational(1), Rational(k, 6)}; }

ExactScalar ExactScalar::pow(int k) const {
  Rational r(1);
  const Rational base = k >= 0 ? r_ : Rational(1) / r_;
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) r *= base;
  return {r, q_ * Rational(k)};
}

ExactScalar ExactScalar::inverse() const { return {Rational(1) / r_, -q_}; }

bool ExactScalar::is_sixth_root_of_unity() const { return mu6_exponent().has_value(); }

std::optional<int> ExactScalar::mu6_exponent() const {
  if (r_ != Rational(1)) return std::nullopt;
  const Rational six_q = q_ * Rational(6);
  if (six_q.denominator() != 1) return std::nullopt;
  return static_cast<int>(six_q.numerator());
}

std::complex<double> ExactScalar::to_complex() const {
  const double modulus = boost::rational_cast<double>(r_);
  const double angle = 2.0 * std::numbers::pi * boost::rational_cast<double>(q_);
  return std::polar(modulus, angle);
}

ExactScalar operator*(const ExactScalar& lhs, const ExactScalar& rhs) {
  return {lhs.r_ * rhs.r_, lhs.q_ + rhs.q_};
}

ExactScalar operator/(const ExactScalar& lhs, const ExactScalar& rhs) { return lhs * rhs.inverse(); }

bool ratio_in_mu6(const ExactScalar& lambda, const ExactScalar& mu) {
  return (lambda / mu).is_sixth_root_of_unity();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) {
  os << format_rational(s.modulus());
  if (s.turn() != Rational(0)) os << "*e(" << format_rational(s.turn()) << ')';
  return os;
}

void to_json(nlohmann::json& j, const ExactScalar& s) {
  j = nlohmann::json{{"r", format_rational(s.modulus())}, {"q", format_rational(s.turn())}};
}

void from_json(const nlohmann::json& j, ExactScalar& s) {
  if (!j.is_object() || !j.contains("r") || !j.contains("q")) {
    throw ParseError("lambda must be an object {\"r\":\"p/q\",\"q\":\"p/q\"}");
  }
  auto read = [](const nlohmann::json& v) -> Rational {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    throw ParseError("rationals must be strings \"p/q\"");
  };
  const Rational r = read(j.at("r"));
  if (r <= Rational(0)) throw ParseError("lambda modulus must be positive");
  s = ExactScalar(r, read(j.at("q")));
}

}  // namespace b3rep::rep
