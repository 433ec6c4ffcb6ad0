#include "fofana/summed_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fofana {

namespace {

double power_term(double v, const Exponent& q) {
  const double a = std::abs(v);
  if (q.value() == 1.0) return a;
  if (q.value() == 2.0) return a * a;
  return std::pow(a, q.value());
}

}  // namespace

SummedTable::SummedTable(const GridFunction& f, Exponent q) : lattice_(f.lattice()) {
  if (q.is_infinite()) {
    throw std::invalid_argument("summed table: q = inf has no cumulative-sum form");
  }
  const std::int64_t n = lattice_.cells_per_axis();
  if (lattice_.dim() == 1) {
    cum_.assign(static_cast<std::size_t>(n + 1), 0.0L);
    for (std::int64_t i = 0; i < n; ++i) {
      cum_[static_cast<std::size_t>(i + 1)] =
          cum_[static_cast<std::size_t>(i)] + static_cast<long double>(power_term(f[i], q));
    }
  } else {
    const std::int64_t w = n + 1;
    cum_.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(w), 0.0L);
    for (std::int64_t iy = 0; iy < n; ++iy) {
      long double row = 0.0L;
      for (std::int64_t ix = 0; ix < n; ++ix) {
        row += static_cast<long double>(power_term(f.at(ix, iy), q));
        cum_[static_cast<std::size_t>((iy + 1) * w + (ix + 1))] =
            cum_[static_cast<std::size_t>(iy * w + (ix + 1))] + row;
      }
    }
  }
}

double SummedTable::box_sum(std::int64_t x0, std::int64_t x1, std::int64_t y0,
                            std::int64_t y1) const {
  const std::int64_t n = lattice_.cells_per_axis();
  x0 = std::max<std::int64_t>(x0, 0);
  x1 = std::min<std::int64_t>(x1, n - 1);
  if (x0 > x1) return 0.0;
  if (lattice_.dim() == 1) {
    return static_cast<double>(cum_[static_cast<std::size_t>(x1 + 1)] -
                               cum_[static_cast<std::size_t>(x0)]);
  }
  y0 = std::max<std::int64_t>(y0, 0);
  y1 = std::min<std::int64_t>(y1, n - 1);
  if (y0 > y1) return 0.0;
  const std::int64_t w = n + 1;
  const auto at = [&](std::int64_t ix, std::int64_t iy) {
    return cum_[static_cast<std::size_t>(iy * w + ix)];
  };
  return static_cast<double>(at(x1 + 1, y1 + 1) - at(x0, y1 + 1) - at(x1 + 1, y0) +
                             at(x0, y0));
}

}  // namespace fofana
