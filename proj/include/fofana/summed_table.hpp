#pragma once

#include <cstdint>
#include <vector>

#include "fofana/exponents.hpp"
#include "fofana/lattice.hpp"

namespace fofana {

// Cumulative sums of the nonnegative field |f|^q (finite q), supporting O(1)
// box sums by inclusion-exclusion. Entries are kept in extended precision so
// that queries on small boxes deep inside a large table still agree with
// direct summation to better than 1e-12 relative.
class SummedTable {
 public:
  SummedTable(const GridFunction& f, Exponent q);

  const Lattice& lattice() const { return lattice_; }

  // Sum of the field over cells [x0, x1] x [y0, y1] (inclusive, clipped to
  // the box; empty ranges yield 0). For d = 1 the y range is ignored.
  double box_sum(std::int64_t x0, std::int64_t x1, std::int64_t y0 = 0,
                 std::int64_t y1 = 0) const;

 private:
  Lattice lattice_;
  std::vector<long double> cum_;  // (n+1) or (n+1)^2 entries, zero border
};

}  // namespace fofana
