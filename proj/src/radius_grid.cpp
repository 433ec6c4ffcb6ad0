#include "fofana/radius_grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fofana {

RadiusGrid::RadiusGrid(std::vector<double> radii, std::string spec)
    : radii_(std::move(radii)), spec_(std::move(spec)) {
  if (radii_.empty()) throw std::invalid_argument("radius grid: no radii");
  for (double r : radii_) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw std::invalid_argument("radius grid: radii must be positive and finite");
    }
  }
  if (!std::is_sorted(radii_.begin(), radii_.end())) {
    throw std::invalid_argument("radius grid: radii must be increasing");
  }
  if (std::adjacent_find(radii_.begin(), radii_.end()) != radii_.end()) {
    throw std::invalid_argument("radius grid: radii must be distinct");
  }
}

RadiusGrid RadiusGrid::geometric(double r_min, double r_max, int count) {
  if (!(r_min > 0.0) || !(r_max > r_min)) {
    throw std::invalid_argument("radius grid: need 0 < r_min < r_max");
  }
  if (count < 2) throw std::invalid_argument("radius grid: need at least 2 points");
  std::vector<double> rs(static_cast<std::size_t>(count));
  const double la = std::log(r_min), lb = std::log(r_max);
  for (int i = 0; i < count; ++i) {
    rs[static_cast<std::size_t>(i)] =
        std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  rs.front() = r_min;
  rs.back() = r_max;
  char buf[96];
  std::snprintf(buf, sizeof buf, "geometric:%.17g:%.17g:%d", r_min, r_max, count);
  return RadiusGrid(std::move(rs), buf);
}

RadiusGrid RadiusGrid::explicit_list(std::vector<double> radii) {
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  std::string spec = "list:";
  for (std::size_t i = 0; i < radii.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.17g", i ? "," : "", radii[i]);
    spec += buf;
  }
  return RadiusGrid(std::move(radii), std::move(spec));
}

RadiusGrid RadiusGrid::parse(std::string_view spec) {
  const auto fail = [&](const char* why) {
    throw std::invalid_argument("radius grid spec '" + std::string(spec) + "': " + why);
  };
  const std::string s(spec);
  if (s.rfind("geometric:", 0) == 0) {
    double a = 0, b = 0;
    int count = 0;
    if (std::sscanf(s.c_str(), "geometric:%lf:%lf:%d", &a, &b, &count) != 3) {
      fail("expected geometric:r_min:r_max:count");
    }
    return geometric(a, b, count);
  }
  if (s.rfind("list:", 0) == 0) {
    std::vector<double> rs;
    std::size_t pos = 5;
    while (pos < s.size()) {
      std::size_t next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      try {
        rs.push_back(std::stod(s.substr(pos, next - pos)));
      } catch (const std::exception&) {
        fail("expected list:r1,r2,...");
      }
      pos = next + 1;
    }
    if (rs.empty()) fail("expected at least one radius");
    return explicit_list(std::move(rs));
  }
  fail("unknown kind (use geometric:... or list:...)");
  return geometric(1, 2, 2);  // unreachable
}

RadiusGrid RadiusGrid::all_aligned(const Lattice& lattice) {
  const double h = lattice.spacing();
  const double diameter =
      2.0 * lattice.half_width() * (lattice.dim() == 2 ? std::sqrt(2.0) : 1.0);
  const int m_max = static_cast<int>(std::floor(diameter / h + 1e-9));
  std::vector<double> rs;
  rs.reserve(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) rs.push_back(m * h);
  return RadiusGrid(std::move(rs), "all-aligned");
}

RadiusGrid RadiusGrid::default_for(const Lattice& lattice) {
  return geometric(4.0 * lattice.spacing(), lattice.half_width(), 25);
}

RadiusGrid RadiusGrid::snapped_to(double h) const {
  std::vector<double> rs;
  rs.reserve(radii_.size());
  for (double r : radii_) {
    const double m = std::round(r / h);
    if (m >= 1.0) rs.push_back(m * h);
  }
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  if (rs.empty()) {
    throw std::invalid_argument("radius grid: no radii remain after snapping to the spacing");
  }
  return RadiusGrid(std::move(rs), spec_ + "|snapped");
}

RadiusGrid RadiusGrid::refined() const {
  std::vector<double> rs;
  rs.reserve(2 * radii_.size());
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    rs.push_back(radii_[i]);
    if (i + 1 < radii_.size()) {
      const double mid = std::sqrt(radii_[i] * radii_[i + 1]);
      if (mid > radii_[i] && mid < radii_[i + 1]) rs.push_back(mid);
    }
  }
  return RadiusGrid(std::move(rs), spec_ + "|refined");
}

RadiusGrid RadiusGrid::capped(double cap) const {
  std::vector<double> rs;
  for (double r : radii_) {
    if (r <= cap) rs.push_back(r);
  }
  if (rs.empty()) {
    throw std::invalid_argument("radius grid: every radius exceeds the cap");
  }
  return RadiusGrid(std::move(rs), spec_);
}

}  // namespace fofana
