#pragma once

#include <array>
#include <cstdint>

#include "fofana/exponents.hpp"
#include "fofana/lattice.hpp"
#include "fofana/summed_table.hpp"

namespace fofana {

// h^d * sum of |f(c)|^q over cells whose center lies within distance r of
// ball.center (max of |f| instead for q = inf). Midpoint quadrature of the
// q-th power integral over the ball; cells outside the sampled box carry f=0.
double ball_integral(const GridFunction& f, Exponent q, const Ball& ball);

// (h^d * sum of |f|^q over the cells of cube k)^(1/q); max of |f| for q=inf.
double cube_integral(const GridFunction& f, Exponent q, const CubePartition& part,
                     std::array<std::int64_t, 2> k);
// Same via a precomputed cumulative table of |f|^q (finite q only).
double cube_integral(const SummedTable& table, Exponent q, const CubePartition& part,
                     std::array<std::int64_t, 2> k);

// Number of padding cells needed so that every ball of radius r centered at a
// padded cell can still meet the sampled box.
int ball_pad_cells(const Lattice& lattice, double r);

// The field y -> ball_integral(f, q, B(y, r)) evaluated at every center of
// the lattice padded by ball_pad_cells(r). The fast path resolves each ball
// row through cumulative sums; the direct variant enumerates cells and is
// kept as the serial reference.
GridFunction ball_field(const GridFunction& f, Exponent q, double r);
GridFunction ball_field_direct(const GridFunction& f, Exponent q, double r);

}  // namespace fofana
