#include "fofana/exponents.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fofana {

std::optional<Rational> Rational::from_double(double x, std::int64_t max_den, double rel_tol) {
  if (!std::isfinite(x)) return std::nullopt;
  if (x == 0.0) return Rational{0, 1};

  // Continued-fraction expansion, stopping at the first convergent within
  // tolerance or when the denominator cap is hit.
  const double target = x;
  double v = x;
  std::int64_t h0 = 1, h1 = static_cast<std::int64_t>(std::floor(v));
  std::int64_t k0 = 0, k1 = 1;
  for (int iter = 0; iter < 48; ++iter) {
    const double approx = static_cast<double>(h1) / static_cast<double>(k1);
    if (std::abs(approx - target) <= rel_tol * std::abs(target)) {
      return Rational{h1, k1}.normalized();
    }
    const double frac = v - std::floor(v);
    if (frac == 0.0) break;
    v = 1.0 / frac;
    const double af = std::floor(v);
    if (af > 1e15) break;
    const std::int64_t a = static_cast<std::int64_t>(af);
    const std::int64_t h2 = a * h1 + h0;
    const std::int64_t k2 = a * k1 + k0;
    if (k2 > max_den || k2 <= 0) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
  }
  const double approx = static_cast<double>(h1) / static_cast<double>(k1);
  if (std::abs(approx - target) <= rel_tol * std::abs(target)) {
    return Rational{h1, k1}.normalized();
  }
  return std::nullopt;
}

Rational Rational::normalized() const {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  std::int64_t n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational{n, d};
}

Rational Rational::plus(const Rational& o) const {
  return Rational{num * o.den + o.num * den, den * o.den}.normalized();
}

Rational Rational::scaled(std::int64_t k) const { return Rational{num * k, den}.normalized(); }

double Rational::to_double() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

Exponent Exponent::of(double v) {
  if (std::isnan(v) || v < 1.0) {
    throw std::invalid_argument("exponent must lie in [1, inf]");
  }
  return Exponent(v);
}

std::optional<Rational> Exponent::inverse_rational() const {
  if (is_infinite()) return Rational{0, 1};
  return Rational::from_double(inverse());
}

std::string Exponent::str() const {
  if (is_infinite()) return "inf";
  const double v = value();
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Exponent Exponent::parse(std::string_view s) {
  if (s == "inf" || s == "infinity" || s == "Inf" || s == "oo") return infinity();
  try {
    const double v = std::stod(std::string(s));
    return of(v);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("exponent: expected a number >= 1 or 'inf', got '" +
                                std::string(s) + "'");
  }
}

ExponentPair::ExponentPair(Exponent q_, Exponent p_) : q(q_), p(p_) {
  if (!(q <= p)) throw std::invalid_argument("exponent pair requires q <= p");
}

double rational_exponent_sum(int dim, std::initializer_list<std::pair<int, double>> terms) {
  bool exact = true;
  Rational acc{0, 1};
  for (const auto& [coeff, inv] : terms) {
    const auto r = Rational::from_double(inv);
    if (!r) {
      exact = false;
      break;
    }
    acc = acc.plus(r->scaled(coeff));
  }
  if (exact) return acc.scaled(dim).to_double();

  double s = 0.0;
  for (const auto& [coeff, inv] : terms) s += coeff * inv;
  return dim * s;
}

}  // namespace fofana
