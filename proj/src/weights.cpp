#include "fofana/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fofana {

WeightFunction WeightFunction::power(int dim, double alpha) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("phi.d: must be 1 or 2");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("phi.alpha: must be positive and finite");
  }
  WeightFunction w;
  w.kind_ = Kind::kPower;
  w.dim_ = dim;
  w.alpha_ = alpha;
  return w;
}

WeightFunction WeightFunction::power_log(int dim, double alpha, double beta) {
  WeightFunction w = power(dim, alpha);
  if (!std::isfinite(beta)) throw std::invalid_argument("phi.beta: must be finite");
  w.kind_ = Kind::kPowerLog;
  w.beta_ = beta;
  return w;
}

WeightFunction WeightFunction::tabulated(int dim, std::vector<double> knots,
                                         std::vector<double> values) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("phi.d: must be 1 or 2");
  if (knots.size() < 4) throw std::invalid_argument("phi.knots: need at least 4 knots");
  if (knots.size() != values.size()) {
    throw std::invalid_argument("phi.values: must match the number of knots");
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!(knots[i] > 0.0) || !std::isfinite(knots[i])) {
      throw std::invalid_argument("phi.knots: must be positive and finite");
    }
    if (i > 0 && !(knots[i] > knots[i - 1])) {
      throw std::invalid_argument("phi.knots: must be strictly increasing");
    }
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw std::invalid_argument("phi.values: must be positive and finite");
    }
  }
  WeightFunction w;
  w.kind_ = Kind::kTabulated;
  w.dim_ = dim;
  w.knots_ = std::move(knots);
  w.values_ = std::move(values);
  w.log_knots_.resize(w.knots_.size());
  w.log_values_.resize(w.values_.size());
  for (std::size_t i = 0; i < w.knots_.size(); ++i) {
    w.log_knots_[i] = std::log(w.knots_[i]);
    w.log_values_[i] = std::log(w.values_[i]);
  }
  return w;
}

double WeightFunction::power_exponent() const {
  if (kind_ == Kind::kTabulated) return 0.0;
  return rational_exponent_sum(dim_, {{-1, 1.0 / alpha_}});
}

std::optional<double> WeightFunction::alpha_inverse() const {
  if (kind_ == Kind::kTabulated) return std::nullopt;
  return 1.0 / alpha_;
}

double WeightFunction::residual(double t) const {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("phi: argument must be positive and finite");
  }
  switch (kind_) {
    case Kind::kPower:
      return 1.0;
    case Kind::kPowerLog:
      return std::pow(1.0 + std::abs(std::log(t)), beta_);
    case Kind::kTabulated: {
      // Log-linear interpolation; extrapolation allowed one octave past the ends.
      if (t < 0.5 * knots_.front() || t > 2.0 * knots_.back()) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "phi: t=%g outside the tabulated window [%g, %g] (one octave past knots)",
                      t, 0.5 * knots_.front(), 2.0 * knots_.back());
        throw std::invalid_argument(buf);
      }
      const double lt = std::log(t);
      std::size_t hi = static_cast<std::size_t>(
          std::upper_bound(log_knots_.begin(), log_knots_.end(), lt) - log_knots_.begin());
      if (hi == 0) hi = 1;
      if (hi == log_knots_.size()) hi = log_knots_.size() - 1;
      const double x0 = log_knots_[hi - 1], x1 = log_knots_[hi];
      const double y0 = log_values_[hi - 1], y1 = log_values_[hi];
      const double s = (lt - x0) / (x1 - x0);
      return std::exp(y0 + s * (y1 - y0));
    }
  }
  return 1.0;
}

double WeightFunction::operator()(double t) const {
  if (kind_ == Kind::kTabulated) return residual(t);
  return std::pow(t, power_exponent()) * residual(t);
}

std::string WeightFunction::describe() const {
  char buf[96];
  switch (kind_) {
    case Kind::kPower:
      std::snprintf(buf, sizeof buf, "power(alpha=%g)", alpha_);
      return buf;
    case Kind::kPowerLog:
      std::snprintf(buf, sizeof buf, "power-log(alpha=%g, beta=%g)", alpha_, beta_);
      return buf;
    case Kind::kTabulated:
      std::snprintf(buf, sizeof buf, "tabulated(%zu knots on [%g, %g])", knots_.size(),
                    knots_.front(), knots_.back());
      return buf;
  }
  return "?";
}

ClassCheckResult check_class(const WeightFunction& w, Exponent q, Exponent p,
                             const RadiusGrid& t_grid, double cap) {
  if (!(q <= p)) throw std::invalid_argument("class check: requires q <= p");
  if (t_grid.size() < 16) {
    throw std::invalid_argument("class check: grid must have at least 16 points");
  }
  const auto& ts = t_grid.radii();
  const int d = w.dim();

  // u(t) = t^(d/p) phi(t) and v(t) = t^(d/q) phi(t), with the power part of
  // phi folded into a single exponent so members of the class score exactly 1.
  const auto monomial_values = [&](const Exponent& e) {
    std::vector<double> out(ts.size());
    double expo;
    if (const auto ai = w.alpha_inverse()) {
      expo = rational_exponent_sum(d, {{1, e.inverse()}, {-1, *ai}});
    } else {
      expo = rational_exponent_sum(d, {{1, e.inverse()}});
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
      out[i] = std::pow(ts[i], expo) * w.residual(ts[i]);
    }
    return out;
  };
  const std::vector<double> u = monomial_values(p);
  const std::vector<double> v = monomial_values(q);

  ClassCheckResult res;
  res.cap = cap;
  res.c_dec = 0.0;
  res.c_inc = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i; j < ts.size(); ++j) {
      const double dec = u[j] / u[i];  // almost decreasing: u(s) <= C u(r)
      if (dec > res.c_dec) {
        res.c_dec = dec;
        res.witness_dec = {ts[i], ts[j]};
      }
      const double inc = v[i] / v[j];  // almost increasing: v(r) <= C v(s)
      if (inc > res.c_inc) {
        res.c_inc = inc;
        res.witness_inc = {ts[i], ts[j]};
      }
    }
  }
  res.pass = res.c_dec <= cap && res.c_inc <= cap;
  return res;
}

double check_doubling(const WeightFunction& w, const RadiusGrid& t_grid) {
  const auto& ts = t_grid.radii();
  std::vector<double> phi(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) phi[i] = w(ts[i]);
  double c = 1.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i; j < ts.size(); ++j) {
      const double ratio = ts[j] / ts[i];
      if (ratio > 2.0) break;  // grid is sorted; larger j only grows the ratio
      c = std::max(c, std::max(phi[i] / phi[j], phi[j] / phi[i]));
    }
  }
  return c;
}

namespace {

// integral of phi(t)^q t^(s-1) dt over [a, b]: trapezoid rule in u = ln t of
// the smooth integrand phi(e^u)^q e^(us).
double log_trapezoid(const WeightFunction& w, double qv, double s, double a, double b,
                     int nodes_per_decade = 64) {
  if (!(b > a)) return 0.0;
  const double ua = std::log(a), ub = std::log(b);
  const double decades = (ub - ua) / std::log(10.0);
  const int n = std::max(16, static_cast<int>(std::ceil(decades * nodes_per_decade)));
  const double du = (ub - ua) / n;
  const auto g = [&](double u) {
    const double t = std::exp(u);
    return std::pow(w(t), qv) * std::exp(u * s);
  };
  double acc = 0.5 * (g(ua) + g(ub));
  for (int i = 1; i < n; ++i) acc += g(ua + i * du);
  return acc * du;
}

}  // namespace

NakaiResult nakai_constant(const WeightFunction& w, Exponent q, Exponent p, int dim,
                           const RadiusGrid& r_probes, double t_max, bool allow_q1) {
  if (dim != w.dim()) throw std::invalid_argument("nakai: dimension does not match the weight");
  if (q.is_infinite()) throw std::invalid_argument("nakai: q must be finite");
  if (q.value() == 1.0 && !allow_q1) {
    throw std::invalid_argument("nakai: q = 1 is outside the admissible range (pass allow_q1 "
                                "to evaluate the bare condition anyway)");
  }
  if (!(q <= p)) throw std::invalid_argument("nakai: requires q <= p");
  const double r_top = r_probes.radii().back();
  if (!(t_max >= 100.0 * r_top)) {
    throw std::invalid_argument("nakai: t_max must be at least 100 * max probe radius");
  }

  const double qv = q.value();
  const double s = rational_exponent_sum(dim, {{1, p.inverse()}}) * qv;  // dq/p

  NakaiResult res;
  // Exponent of the pure power part of the integrand plus one: for power
  // weights the tail behaves like t^(e), e + 1 = dq(1/p - 1/alpha), and the
  // rational combination makes the alpha = p case vanish exactly.
  double tail_exp_p1 = 0.0;
  if (const auto ai = w.alpha_inverse()) {
    tail_exp_p1 = rational_exponent_sum(dim, {{1, p.inverse()}, {-1, *ai}}) * qv;
  }

  if (w.kind() == WeightFunction::Kind::kPower) {
    res.divergent = tail_exp_p1 >= 0.0;
  }

  double worst = 0.0;
  for (double r : r_probes.radii()) {
    NakaiRow row;
    row.r = r;
    row.bound = std::pow(w(r), qv) * std::pow(r, s);
    if (res.divergent) {
      row.integral = std::numeric_limits<double>::infinity();
      row.ratio = std::numeric_limits<double>::infinity();
      res.rows.push_back(row);
      continue;
    }
    double integral = log_trapezoid(w, qv, s, r, t_max);
    if (w.kind() == WeightFunction::Kind::kPower) {
      // Closed-form tail beyond t_max: integral of t^(e) with e + 1 < 0.
      integral += std::pow(w(t_max), qv) * std::pow(t_max, s) / (-tail_exp_p1);
    } else {
      // Last-decade heuristic: a slowly decaying (or growing) integrand
      // signals divergence of the infinite tail.
      const double last_decade = log_trapezoid(w, qv, s, t_max / 10.0, t_max);
      if (last_decade > 0.10 * integral) {
        res.divergent = true;
        for (auto& done : res.rows) {
          done.integral = std::numeric_limits<double>::infinity();
          done.ratio = std::numeric_limits<double>::infinity();
        }
        row.integral = std::numeric_limits<double>::infinity();
        row.ratio = std::numeric_limits<double>::infinity();
        res.rows.push_back(row);
        continue;
      }
    }
    row.integral = integral;
    row.ratio = integral / row.bound;
    worst = std::max(worst, row.ratio);
    res.rows.push_back(row);
  }
  if (!res.divergent) res.c_hat = worst;
  return res;
}

CheckReport lemma_dyadic_lower_bound(const WeightFunction& w, Exponent q, Exponent p, int dim,
                                     double r, int i_max) {
  if (dim != w.dim()) throw std::invalid_argument("dyadic bound: dimension mismatch");
  if (q.is_infinite()) throw std::invalid_argument("dyadic bound: q must be finite");
  if (!(r > 0.0)) throw std::invalid_argument("dyadic bound: r must be positive");
  if (i_max < 1) throw std::invalid_argument("dyadic bound: i_max must be at least 1");

  const double qv = q.value();
  const double s = rational_exponent_sum(dim, {{1, p.inverse()}}) * qv;

  CheckReport rep;
  rep.check_id = "dyadic-lower-bound";
  rep.cap = std::numeric_limits<double>::infinity();
  rep.drift_bound = 0.0;
  double worst = 0.0;
  for (int i = 1; i <= i_max; ++i) {
    const double a = std::ldexp(r, i);      // 2^i r, exact scaling
    const double b = std::ldexp(r, i + 1);  // 2^(i+1) r
    CheckRow row;
    row.case_id = "i=" + std::to_string(i);
    row.input = w.describe();
    row.r = a;
    row.lhs = std::pow(a, s) * std::pow(w(b), qv);
    row.rhs = log_trapezoid(w, qv, s, a, b, 256);
    row.ratio = row.lhs / row.rhs;
    row.pass = std::isfinite(row.ratio);
    worst = std::max(worst, row.ratio);
    rep.rows.push_back(row);
  }
  rep.c_emp = worst;
  rep.pass = std::isfinite(worst);
  return rep;
}

}  // namespace fofana
