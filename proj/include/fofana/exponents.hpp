#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace fofana {

// Small exact rational used for exponent bookkeeping. Combinations such as
// d*(1/alpha - 1/q - 1/p) must vanish exactly when they cancel, which naive
// double arithmetic does not guarantee (e.g. 1/2 - 1/3 - 1/6).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static std::optional<Rational> from_double(double x, std::int64_t max_den = 4096,
                                             double rel_tol = 1e-12);
  Rational normalized() const;
  Rational plus(const Rational& o) const;
  Rational scaled(std::int64_t k) const;
  double to_double() const;
};

// Lebesgue exponent in [1, inf]. Infinity is an explicit state, never a
// floating sentinel that leaks into arithmetic: inverse() is exactly 0 there.
class Exponent {
 public:
  static Exponent infinity() { return Exponent(std::numeric_limits<double>::infinity()); }
  static Exponent of(double v);

  bool is_infinite() const { return v_ == std::numeric_limits<double>::infinity(); }
  double value() const { return v_; }
  double inverse() const { return is_infinite() ? 0.0 : 1.0 / v_; }
  std::optional<Rational> inverse_rational() const;

  std::string str() const;
  static Exponent parse(std::string_view s);

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.v_ == b.v_; }
  friend bool operator<=(const Exponent& a, const Exponent& b) { return a.v_ <= b.v_; }
  friend bool operator<(const Exponent& a, const Exponent& b) { return a.v_ < b.v_; }

 private:
  explicit Exponent(double v) : v_(v) {}
  double v_;
};

struct ExponentPair {
  Exponent q;
  Exponent p;
  ExponentPair(Exponent q_, Exponent p_);
};

// dim * sum(coeff_i * inv_i), where each inv_i is the inverse of an exponent
// (or of a weight parameter alpha). When every inverse snaps to a small
// rational the sum is evaluated exactly in integer arithmetic.
double rational_exponent_sum(int dim,
                             std::initializer_list<std::pair<int, double>> inverse_terms);

}  // namespace fofana
