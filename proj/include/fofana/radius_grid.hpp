#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fofana/lattice.hpp"

namespace fofana {

// Strictly increasing grid of positive radii used for suprema over scales.
class RadiusGrid {
 public:
  static RadiusGrid geometric(double r_min, double r_max, int count);
  static RadiusGrid explicit_list(std::vector<double> radii);
  // "geometric:r_min:r_max:count" or "list:r1,r2,..."
  static RadiusGrid parse(std::string_view spec);
  // Every whole multiple of h up to the lattice diameter 2*L*sqrt(d).
  static RadiusGrid all_aligned(const Lattice& lattice);
  // Default grid for norm suprema: geometric from 4h to L, 25 points.
  static RadiusGrid default_for(const Lattice& lattice);

  // Radii rounded to whole multiples of h (deduplicated, zero dropped).
  RadiusGrid snapped_to(double h) const;
  // Superset refinement: log-midpoints inserted between neighbors. Suprema
  // over the refined grid are never smaller, which stability checks rely on.
  RadiusGrid refined() const;
  // Radii strictly above `cap` removed.
  RadiusGrid capped(double cap) const;

  const std::vector<double>& radii() const { return radii_; }
  std::size_t size() const { return radii_.size(); }
  const std::string& spec() const { return spec_; }

 private:
  RadiusGrid(std::vector<double> radii, std::string spec);
  std::vector<double> radii_;
  std::string spec_;
};

}  // namespace fofana
