#pragma once

#include <vector>

#include "fofana/lattice.hpp"
#include "fofana/radius_grid.hpp"
#include "fofana/report.hpp"

namespace fofana {

// Discrete Hardy-Littlewood maximal operator over a fixed radius set:
//   Mf(x) = max over r of (sum of |f| over cells within r of x) / cell count.
// The degenerate radius 0 (the cell itself) is always part of the sup, which
// makes Mf >= |f| exact. Counts refer to the full lattice ball, including
// cells outside the sampled box where f = 0, so averages match the continuum
// normalization near the boundary.
struct MaximalConfig {
  enum class Method { kNaive, kPrefixCube };

  // Radii snapped to whole multiples of h, deduplicated, and capped at the
  // lattice diameter 2 L sqrt(d); averages at larger radii only shrink.
  static MaximalConfig make(const Lattice& lattice, const RadiusGrid& radii,
                            Method method = Method::kNaive);

  Method method = Method::kNaive;
  std::vector<double> radii;        // positive, aligned; radius 0 is implicit
  std::vector<std::int64_t> shells;  // the same radii in units of h
};

// OpenMP-parallel over cells; every cell's maximum is computed independently
// in a fixed radius order, so results are identical for any thread count.
GridFunction maximal_function(const GridFunction& f, const MaximalConfig& cfg);
// Plain serial loop kept as the reference implementation.
GridFunction maximal_function_serial(const GridFunction& f, const MaximalConfig& cfg);

// Exact maximal function of the interval indicator in one dimension:
// 1 inside, r / (|x - center| + r) on and outside the boundary.
double indicator_maximal_oracle_1d(double center, double r, double x);

// Pointwise sanity of the operator on a pair of inputs: Mf >= |f|,
// M(f+g) <= Mf + Mg, and M(-2 f) = 2 Mf (the scalar is a power of two, so
// homogeneity is exact in floating point).
CheckReport pointwise_properties_check(const GridFunction& f, const GridFunction& g,
                                       const MaximalConfig& cfg);

}  // namespace fofana
