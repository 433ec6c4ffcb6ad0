#include "fofana/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fofana {

Lattice Lattice::make(int dim, double h, double half_width, std::size_t cell_cap) {
  if (dim != 1 && dim != 2) {
    throw std::invalid_argument("lattice.d: must be 1 or 2, got " + std::to_string(dim));
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("lattice.h: spacing must be positive and finite");
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw std::invalid_argument("lattice.L: half-width must be positive and finite");
  }
  if (half_width < 2.0 * h) {
    throw std::invalid_argument("lattice.L: half-width must be at least 2h");
  }
  const double n_real = 2.0 * std::round(half_width / h);
  if (n_real > 1e12) throw std::invalid_argument("lattice: cell count overflows");
  const int n = static_cast<int>(n_real);
  const std::size_t cells = dim == 1 ? static_cast<std::size_t>(n)
                                     : static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (cells > cell_cap) {
    throw std::invalid_argument("lattice: " + std::to_string(cells) +
                                " cells exceed the memory cap of " + std::to_string(cell_cap));
  }
  return Lattice(dim, h, n);
}

Lattice Lattice::padded(int pad_cells) const {
  if (pad_cells < 0) throw std::invalid_argument("lattice: negative padding");
  Lattice out = *this;
  out.n_ = n_ + 2 * pad_cells;
  return out;
}

Lattice Lattice::refined() const {
  Lattice out = *this;
  out.h_ = 0.5 * h_;
  out.n_ = 2 * n_;
  return out;
}

GridFunction::GridFunction(Lattice lattice, std::vector<double> values)
    : lattice_(lattice), values_(std::move(values)) {
  if (values_.size() != lattice_.cell_count()) {
    throw std::invalid_argument("grid function: value count " + std::to_string(values_.size()) +
                                " does not match the lattice cell count " +
                                std::to_string(lattice_.cell_count()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("grid function: values must be finite");
    }
  }
}

CubePartition CubePartition::make(const Lattice& lattice, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("cube scale: must be positive and finite");
  }
  const double units = scale / lattice.spacing();
  const double m_real = std::round(units);
  if (m_real < 1.0 || std::abs(units - m_real) > 1e-9 * std::max(1.0, units)) {
    throw std::invalid_argument("cube scale: " + std::to_string(scale) +
                                " is not a whole multiple of the lattice spacing");
  }
  return CubePartition(lattice, scale, static_cast<std::int64_t>(m_real));
}

std::int64_t CubePartition::k_of(std::int64_t i) const {
  // Cell center in doubled units is 2i + 1 - n; cube k covers [2mk, 2m(k+1)).
  const std::int64_t u2 = 2 * i + 1 - n();
  const std::int64_t m2 = 2 * m_;
  std::int64_t k = u2 / m2;
  if (u2 < 0 && u2 % m2 != 0) --k;
  return k;
}

std::pair<std::int64_t, std::int64_t> CubePartition::cell_range(std::int64_t k) const {
  const std::int64_t m2 = 2 * m_;
  // Smallest i with 2i + 1 - n >= 2mk, largest i with 2i + 1 - n < 2m(k+1).
  const auto ceil_div = [](std::int64_t a, std::int64_t b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
  };
  std::int64_t first = ceil_div(m2 * k + n() - 1, 2);
  std::int64_t last = ceil_div(m2 * (k + 1) + n() - 1, 2) - 1;
  if (first < 0) first = 0;
  if (last > n() - 1) last = n() - 1;
  return {first, last};
}

double radius_units(double r, double h) {
  const double u = r / h;
  const double nearest = std::round(u);
  if (std::abs(u - nearest) <= 1e-9 * std::max(1.0, std::abs(u))) return nearest;
  return u;
}

std::int64_t ball_row_halfwidth(std::int64_t a, double rho2) {
  const double rem = rho2 - static_cast<double>(a) * static_cast<double>(a);
  if (rem < 0.0) return -1;
  std::int64_t b = static_cast<std::int64_t>(std::floor(std::sqrt(rem)));
  const auto inside = [&](std::int64_t bb) {
    return static_cast<double>(a) * static_cast<double>(a) +
               static_cast<double>(bb) * static_cast<double>(bb) <=
           rho2;
  };
  while (inside(b + 1)) ++b;
  while (b >= 0 && !inside(b)) --b;
  return b;
}

}  // namespace fofana
