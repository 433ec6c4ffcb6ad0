#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace fofana {

inline constexpr std::size_t kDefaultCellCap = std::size_t{1} << 24;

// Uniform lattice of cells covering the box [-L, L]^d, d = 1 or 2, with
// n = 2*round(L/h) cells per axis and cell centers x_i = (i + 1/2 - n/2) h.
//
// All geometric predicates in this library are evaluated in units of h
// ("index space"), where center coordinates are exact dyadic numbers.
// Radii that are whole multiples of h therefore include their boundary
// shell of cells exactly, independent of translation.
class Lattice {
 public:
  static Lattice make(int dim, double h, double half_width,
                      std::size_t cell_cap = kDefaultCellCap);

  int dim() const { return dim_; }
  double spacing() const { return h_; }
  int cells_per_axis() const { return n_; }
  // Effective half-width n*h/2; equals the requested L up to rounding of L/h.
  double half_width() const { return 0.5 * n_ * h_; }
  std::size_t cell_count() const {
    return dim_ == 1 ? static_cast<std::size_t>(n_)
                     : static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
  }

  double center(std::int64_t i) const { return center_units(i) * h_; }
  // Exact in floating point: i + 1/2 - n/2 is a half-integer.
  double center_units(std::int64_t i) const {
    return static_cast<double>(i) + 0.5 - 0.5 * static_cast<double>(n_);
  }

  std::size_t index(std::int64_t ix, std::int64_t iy = 0) const {
    return static_cast<std::size_t>(iy) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(ix);
  }

  // Same box, pad extra cells beyond every face (used for amalgam fields).
  Lattice padded(int pad_cells) const;
  // Same box, spacing h/2.
  Lattice refined() const;

  bool operator==(const Lattice&) const = default;

 private:
  Lattice(int dim, double h, int n) : dim_(dim), h_(h), n_(n) {}
  int dim_;
  double h_;
  int n_;
};

// Finite-valued samples on a lattice; the function is zero outside the box.
// Values are stored row-major for d = 2 (x fastest).
class GridFunction {
 public:
  GridFunction(Lattice lattice, std::vector<double> values);

  const Lattice& lattice() const { return lattice_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t flat) const { return values_[flat]; }
  double at(std::int64_t ix, std::int64_t iy = 0) const {
    return values_[lattice_.index(ix, iy)];
  }

 private:
  Lattice lattice_;
  std::vector<double> values_;
};

struct Ball {
  std::array<double, 2> center{0.0, 0.0};
  double radius = 1.0;
};

// Tiling of space by half-open cubes Q_k = prod_i [r k_i, r (k_i + 1)) at a
// scale r that is a whole multiple of the lattice spacing. Cell centers are
// half-integers in units of h, so no center ever lies on a cube face and the
// tiling partitions the cells exactly.
class CubePartition {
 public:
  static CubePartition make(const Lattice& lattice, double scale);

  double scale() const { return scale_; }
  std::int64_t cells_per_cube_axis() const { return m_; }
  // Cube indices that meet the sampled box, per axis (inclusive).
  std::int64_t k_min() const { return k_of(0); }
  std::int64_t k_max() const { return k_of(n() - 1); }
  // Cell index range [first, last] covered by cube slab k, clipped to the box;
  // first > last means the slab is empty.
  std::pair<std::int64_t, std::int64_t> cell_range(std::int64_t k) const;

  const Lattice& lattice() const { return lattice_; }

 private:
  CubePartition(Lattice lattice, double scale, std::int64_t m)
      : lattice_(lattice), scale_(scale), m_(m) {}
  std::int64_t n() const { return lattice_.cells_per_axis(); }
  std::int64_t k_of(std::int64_t i) const;

  Lattice lattice_;
  double scale_;
  std::int64_t m_;
};

// Radius r in units of h, snapped to the nearest integer when r is a whole
// multiple of h up to 1e-9 relative error. Snapped radii make ball-membership
// comparisons exact integer arithmetic.
double radius_units(double r, double h);

// Half-width (in cells) of row y-offset `a` of the centered ball with
// (snapped) squared radius rho2, i.e. the largest b with a^2 + b^2 <= rho2.
std::int64_t ball_row_halfwidth(std::int64_t a, double rho2);

}  // namespace fofana
