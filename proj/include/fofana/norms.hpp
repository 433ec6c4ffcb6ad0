#pragma once

#include <utility>
#include <vector>

#include "fofana/exponents.hpp"
#include "fofana/integrals.hpp"
#include "fofana/lattice.hpp"
#include "fofana/radius_grid.hpp"
#include "fofana/weights.hpp"

namespace fofana {

// Value of a supremum-over-scales norm together with the scale that attains
// it and the full (r, weighted value) trace, so under-resolved suprema stay
// visible to the caller.
struct NormValue {
  double value = 0.0;
  double argmax_r = 0.0;
  std::vector<std::pair<double, double>> trace;
};

enum class AmalgamVariant { kContinuous, kDiscrete };

// (h^d sum |f|^q)^(1/q); max |f| for q = inf.
double lebesgue_norm(const GridFunction& f, Exponent q);

// L^p norm in y of || f restricted to B(y, r) ||_q, evaluated over the lattice
// padded so every ball that meets the support contributes.
double amalgam_continuous(const GridFunction& f, double r, ExponentPair qp);

// l^p over the aligned cube tiling at scale r of || f restricted to Q_k ||_q.
// The scale must be a whole multiple of the lattice spacing.
double amalgam_discrete(const GridFunction& f, double r, ExponentPair qp);

// sup over the radius grid of r^(d(1/alpha - 1/q - 1/p)) * amalgam_continuous.
// Requires q <= alpha <= p. Identical, value for value, to the generalized
// norm with the power weight of the same alpha.
NormValue fofana_norm(const GridFunction& f, ExponentPair qp, double alpha,
                      const RadiusGrid& radii);

// sup over the radius grid of the weighted amalgam:
//   continuous: phi(r)^-1 r^(-d(1/q + 1/p)) * amalgam_continuous(f, r)
//   discrete:   phi(r)^-1 r^(-d/q)          * amalgam_discrete(f, r)
NormValue generalized_fofana_norm(const GridFunction& f, ExponentPair qp,
                                  const WeightFunction& w, const RadiusGrid& radii,
                                  AmalgamVariant variant = AmalgamVariant::kContinuous);

// Generalized Morrey norm: the p = inf column of the continuous family.
NormValue morrey_norm(const GridFunction& f, Exponent q, const WeightFunction& w,
                      const RadiusGrid& radii);

}  // namespace fofana
