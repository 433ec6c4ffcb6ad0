#include "fofana/norms.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>

#include "fofana/accumulate.hpp"

namespace fofana {

namespace {

double cell_volume(const Lattice& lat) {
  return lat.dim() == 1 ? lat.spacing() : lat.spacing() * lat.spacing();
}

double qth_root(double x, const Exponent& q) {
  if (q.value() == 1.0) return x;
  if (q.value() == 2.0) return std::sqrt(x);
  return std::pow(x, q.inverse());
}

// (volume * sum |x|^p)^(1/p), max |x| for p = inf. Terms are scaled by the
// maximum so the largest entry contributes exactly 1.0^p; this keeps
// one-element data exact and makes l^p monotonicity in p hold on the nose.
double lp_norm_scaled(std::span<const double> xs, const Exponent& p, double volume) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  if (m == 0.0) return 0.0;
  if (p.is_infinite()) return m;
  NeumaierSum acc;
  const double pv = p.value();
  for (double x : xs) {
    const double u = std::abs(x) / m;
    if (u == 0.0) continue;
    acc.add(pv == 1.0 ? u : (pv == 2.0 ? u * u : std::pow(u, pv)));
  }
  return m * std::pow(volume * acc.value(), p.inverse());
}

}  // namespace

double lebesgue_norm(const GridFunction& f, Exponent q) {
  return lp_norm_scaled(f.values(), q, cell_volume(f.lattice()));
}

double amalgam_continuous(const GridFunction& f, double r, ExponentPair qp) {
  const GridFunction field = ball_field(f, qp.q, r);
  if (qp.q.is_infinite()) {
    return lp_norm_scaled(field.values(), qp.p, cell_volume(field.lattice()));
  }
  std::vector<double> g(field.values().size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = qth_root(field[i], qp.q);
  return lp_norm_scaled(g, qp.p, cell_volume(field.lattice()));
}

double amalgam_discrete(const GridFunction& f, double r, ExponentPair qp) {
  const CubePartition part = CubePartition::make(f.lattice(), r);
  const bool use_table = !qp.q.is_infinite();
  const SummedTable* table_ptr = nullptr;
  std::optional<SummedTable> table;
  if (use_table) {
    table.emplace(f, qp.q);
    table_ptr = &*table;
  }

  std::vector<double> cube_norms;
  const std::int64_t k0 = part.k_min(), k1 = part.k_max();
  if (f.lattice().dim() == 1) {
    cube_norms.reserve(static_cast<std::size_t>(k1 - k0 + 1));
    for (std::int64_t k = k0; k <= k1; ++k) {
      cube_norms.push_back(use_table ? cube_integral(*table_ptr, qp.q, part, {k, 0})
                                     : cube_integral(f, qp.q, part, {k, 0}));
    }
  } else {
    cube_norms.reserve(static_cast<std::size_t>((k1 - k0 + 1) * (k1 - k0 + 1)));
    for (std::int64_t ky = k0; ky <= k1; ++ky) {
      for (std::int64_t kx = k0; kx <= k1; ++kx) {
        cube_norms.push_back(use_table ? cube_integral(*table_ptr, qp.q, part, {kx, ky})
                                       : cube_integral(f, qp.q, part, {kx, ky}));
      }
    }
  }
  return lp_norm_scaled(cube_norms, qp.p, 1.0);
}

namespace {

// Weighted supremum over scales shared by the Fofana-type norms. The
// prefactor is r^exponent / residual(r), with every pure power of r folded
// into a single exponent so cancellations (e.g. alpha = q, p = inf) are exact.
NormValue sup_over_radii(const GridFunction& f, ExponentPair qp, const RadiusGrid& radii,
                         const WeightFunction& w, AmalgamVariant variant) {
  const int d = f.lattice().dim();
  if (w.dim() != d) {
    throw std::invalid_argument("norm: weight dimension does not match the lattice");
  }

  double exponent;
  const auto ai = w.alpha_inverse();  // phi's power factor is t^(-d * ai)
  if (variant == AmalgamVariant::kContinuous) {
    exponent = ai ? rational_exponent_sum(d, {{1, *ai}, {-1, qp.q.inverse()}, {-1, qp.p.inverse()}})
                  : rational_exponent_sum(d, {{-1, qp.q.inverse()}, {-1, qp.p.inverse()}});
  } else {
    exponent = ai ? rational_exponent_sum(d, {{1, *ai}, {-1, qp.q.inverse()}})
                  : rational_exponent_sum(d, {{-1, qp.q.inverse()}});
  }

  NormValue out;
  out.trace.reserve(radii.size());
  bool first = true;
  for (double r : radii.radii()) {
    const double amalgam = variant == AmalgamVariant::kContinuous
                               ? amalgam_continuous(f, r, qp)
                               : amalgam_discrete(f, r, qp);
    const double prefactor = std::pow(r, exponent) / w.residual(r);
    const double value = prefactor * amalgam;
    out.trace.emplace_back(r, value);
    if (first || value > out.value) {
      out.value = value;
      out.argmax_r = r;
      first = false;
    }
  }
  return out;
}

}  // namespace

NormValue fofana_norm(const GridFunction& f, ExponentPair qp, double alpha,
                      const RadiusGrid& radii) {
  const Exponent a = Exponent::of(alpha);
  if (!(qp.q <= a && a <= qp.p)) {
    throw std::invalid_argument("fofana norm: requires q <= alpha <= p");
  }
  return sup_over_radii(f, qp, radii, WeightFunction::power(f.lattice().dim(), alpha),
                        AmalgamVariant::kContinuous);
}

NormValue generalized_fofana_norm(const GridFunction& f, ExponentPair qp,
                                  const WeightFunction& w, const RadiusGrid& radii,
                                  AmalgamVariant variant) {
  return sup_over_radii(f, qp, radii, w, variant);
}

NormValue morrey_norm(const GridFunction& f, Exponent q, const WeightFunction& w,
                      const RadiusGrid& radii) {
  return sup_over_radii(f, ExponentPair(q, Exponent::infinity()), radii, w,
                        AmalgamVariant::kContinuous);
}

}  // namespace fofana
