#include "fofana/sampling.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fofana {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

double unit_from_hash(std::uint64_t h) {
  // 53 uniform bits in [0, 1), mapped to [-1, 1).
  return 2.0 * (static_cast<double>(h >> 11) * 0x1.0p-53) - 1.0;
}

double step_value(const StepRandomSpec& s, double block_len, double x, double y, int dim) {
  const std::int64_t bx = static_cast<std::int64_t>(std::floor(x / block_len));
  const std::int64_t by =
      dim == 2 ? static_cast<std::int64_t>(std::floor(y / block_len)) : 0;
  std::uint64_t h = splitmix64(s.seed ^ 0x5bf03635ULL);
  h = splitmix64(h ^ static_cast<std::uint64_t>(bx));
  h = splitmix64(h ^ (static_cast<std::uint64_t>(by) * 0x9e3779b97f4a7c15ULL));
  return unit_from_hash(h);
}

struct Sampler {
  const Lattice& lat;

  double operator()(const ConstantSpec& s, double, double) const { return s.value; }

  double operator()(const IndicatorBallSpec& s, double x, double y) const {
    const double dx = x - s.center[0];
    const double dy = lat.dim() == 2 ? y - s.center[1] : 0.0;
    return dx * dx + dy * dy < s.radius * s.radius ? 1.0 : 0.0;
  }

  double operator()(const GaussianSpec& s, double x, double y) const {
    const double r2 = x * x + (lat.dim() == 2 ? y * y : 0.0);
    return std::exp(-r2 / (2.0 * s.sigma * s.sigma));
  }

  double operator()(const PowerTailSpec& s, double x, double y) const {
    const double r = std::sqrt(x * x + (lat.dim() == 2 ? y * y : 0.0));
    const double e = -static_cast<double>(lat.dim()) / s.alpha;
    return r <= s.eps ? std::pow(s.eps, e) : std::pow(r, e);
  }

  double operator()(const StepRandomSpec& s, double x, double y) const {
    const double block_len =
        s.block_len ? *s.block_len : s.block_cells * lat.spacing();
    return step_value(s, block_len, x, y, lat.dim());
  }
};

void validate(const FunctionSpec& spec) {
  if (const auto* b = std::get_if<IndicatorBallSpec>(&spec)) {
    if (!(b->radius > 0.0)) throw std::invalid_argument("indicator-ball.r0: must be positive");
  } else if (const auto* g = std::get_if<GaussianSpec>(&spec)) {
    if (!(g->sigma > 0.0)) throw std::invalid_argument("gaussian.sigma: must be positive");
  } else if (const auto* t = std::get_if<PowerTailSpec>(&spec)) {
    if (!(t->alpha > 0.0)) throw std::invalid_argument("power-tail.alpha: must be positive");
    if (!(t->eps > 0.0)) throw std::invalid_argument("power-tail.eps: must be positive");
  } else if (const auto* r = std::get_if<StepRandomSpec>(&spec)) {
    if (r->block_cells < 1 && !r->block_len) {
      throw std::invalid_argument("step-random.block: must be at least one cell");
    }
    if (r->block_len && !(*r->block_len > 0.0)) {
      throw std::invalid_argument("step-random.block_len: must be positive");
    }
  }
}

}  // namespace

GridFunction sample(const FunctionSpec& spec, const Lattice& lattice) {
  validate(spec);
  const int n = lattice.cells_per_axis();
  std::vector<double> values(lattice.cell_count());
  const Sampler sampler{lattice};
  if (lattice.dim() == 1) {
    for (int i = 0; i < n; ++i) {
      values[static_cast<std::size_t>(i)] =
          std::visit([&](const auto& s) { return sampler(s, lattice.center(i), 0.0); }, spec);
    }
  } else {
    for (int iy = 0; iy < n; ++iy) {
      const double y = lattice.center(iy);
      for (int ix = 0; ix < n; ++ix) {
        values[lattice.index(ix, iy)] =
            std::visit([&](const auto& s) { return sampler(s, lattice.center(ix), y); }, spec);
      }
    }
  }
  return GridFunction(lattice, std::move(values));
}

std::string describe(const FunctionSpec& spec) {
  char buf[128];
  if (const auto* c = std::get_if<ConstantSpec>(&spec)) {
    std::snprintf(buf, sizeof buf, "constant(%g)", c->value);
  } else if (const auto* b = std::get_if<IndicatorBallSpec>(&spec)) {
    std::snprintf(buf, sizeof buf, "indicator-ball(c=(%g,%g), r0=%g)", b->center[0], b->center[1],
                  b->radius);
  } else if (const auto* g = std::get_if<GaussianSpec>(&spec)) {
    std::snprintf(buf, sizeof buf, "gaussian(sigma=%g)", g->sigma);
  } else if (const auto* t = std::get_if<PowerTailSpec>(&spec)) {
    std::snprintf(buf, sizeof buf, "power-tail(alpha=%g, eps=%g)", t->alpha, t->eps);
  } else if (const auto* r = std::get_if<StepRandomSpec>(&spec)) {
    if (r->block_len) {
      std::snprintf(buf, sizeof buf, "step-random(seed=%llu, block_len=%g)",
                    static_cast<unsigned long long>(r->seed), *r->block_len);
    } else {
      std::snprintf(buf, sizeof buf, "step-random(seed=%llu, block=%d)",
                    static_cast<unsigned long long>(r->seed), r->block_cells);
    }
  } else {
    return "unknown";
  }
  return buf;
}

}  // namespace fofana
