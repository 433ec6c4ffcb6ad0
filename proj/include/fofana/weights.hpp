#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fofana/exponents.hpp"
#include "fofana/radius_grid.hpp"
#include "fofana/report.hpp"

namespace fofana {

// Scale weight phi: (0, inf) -> (0, inf). Three families:
//   power:     phi(t) = t^(-d/alpha)
//   power-log: phi(t) = t^(-d/alpha) * (1 + |ln t|)^beta
//   tabulated: log-linear interpolation through positive knots, extrapolated
//              at most one octave beyond either end.
//
// The pure power factor is tracked separately (power_exponent/residual) so
// that callers can fold it into other exponents of t and keep cancellations
// such as alpha = q exact.
class WeightFunction {
 public:
  enum class Kind { kPower, kPowerLog, kTabulated };

  static WeightFunction power(int dim, double alpha);
  static WeightFunction power_log(int dim, double alpha, double beta);
  static WeightFunction tabulated(int dim, std::vector<double> knots, std::vector<double> values);

  double operator()(double t) const;

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& values() const { return values_; }

  // phi(t) = t^power_exponent() * residual(t); the exponent is -d/alpha for
  // the power families and 0 for tabulated weights.
  double power_exponent() const;
  // 1/alpha for the power families (exact-rational aware), nullopt otherwise.
  std::optional<double> alpha_inverse() const;
  double residual(double t) const;

  std::string describe() const;

 private:
  WeightFunction() = default;
  Kind kind_ = Kind::kPower;
  int dim_ = 1;
  double alpha_ = 2.0;
  double beta_ = 0.0;
  std::vector<double> knots_, values_;  // tabulated only
  std::vector<double> log_knots_, log_values_;
};

// Almost-monotonicity constants of t^(d/p) phi(t) (almost decreasing) and
// t^(d/q) phi(t) (almost increasing) over all ordered pairs of the grid.
// The two constants are reported separately and never collapsed.
struct ClassCheckResult {
  double c_dec = 1.0;
  double c_inc = 1.0;
  double cap = 1e6;
  bool pass = false;
  std::pair<double, double> witness_dec{0.0, 0.0};  // (r, s), r <= s, attaining c_dec
  std::pair<double, double> witness_inc{0.0, 0.0};
};

ClassCheckResult check_class(const WeightFunction& w, Exponent q, Exponent p,
                             const RadiusGrid& t_grid, double cap = 1e6);

// Smallest C with 1/C <= phi(r)/phi(s) <= C over grid pairs with r/s in [1/2, 2].
double check_doubling(const WeightFunction& w, const RadiusGrid& t_grid);

struct NakaiRow {
  double r = 0.0;
  double integral = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};

// Empirical constant for the tail condition
//   integral_r^inf phi(t)^q t^(dq/p - 1) dt <= C phi(r)^q r^(dq/p).
// Power weights get an exact closed-form tail beyond T_max (divergent when
// alpha >= p); other kinds are integrated by log-spaced quadrature up to
// T_max with a last-decade divergence heuristic.
struct NakaiResult {
  bool divergent = false;
  std::optional<double> c_hat;  // unset iff divergent
  std::vector<NakaiRow> rows;
};

NakaiResult nakai_constant(const WeightFunction& w, Exponent q, Exponent p, int dim,
                           const RadiusGrid& r_probes, double t_max, bool allow_q1 = false);

// Dyadic-shell lower bound: for i = 1..i_max,
//   (2^i r)^(dq/p) phi(2^(i+1) r)^q <= C integral over [2^i r, 2^(i+1) r]
// of phi(t)^q t^(dq/p - 1) dt. Rows carry both sides; C is the worst ratio.
CheckReport lemma_dyadic_lower_bound(const WeightFunction& w, Exponent q, Exponent p, int dim,
                                     double r, int i_max);

}  // namespace fofana
