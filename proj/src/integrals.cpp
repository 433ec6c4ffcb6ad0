#include "fofana/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fofana/accumulate.hpp"
#include "fofana/parallel.hpp"

namespace fofana {

namespace {

double cell_volume(const Lattice& lat) {
  return lat.dim() == 1 ? lat.spacing() : lat.spacing() * lat.spacing();
}

double power_term(double v, const Exponent& q) {
  const double a = std::abs(v);
  if (q.value() == 1.0) return a;
  if (q.value() == 2.0) return a * a;
  return std::pow(a, q.value());
}

// Clipped index interval around a (possibly fractional) center coordinate.
struct AxisWindow {
  std::int64_t lo, hi;
};

AxisWindow axis_window(double v_units, double reach, std::int64_t n, std::int64_t half_n_offset) {
  // Cell i has center u(i) = i + 1/2 - n/2; invert with a 2-cell guard band.
  const double base = v_units + 0.5 * static_cast<double>(half_n_offset) - 0.5;
  std::int64_t lo = static_cast<std::int64_t>(std::floor(base - reach)) - 2;
  std::int64_t hi = static_cast<std::int64_t>(std::ceil(base + reach)) + 2;
  lo = std::max<std::int64_t>(lo, 0);
  hi = std::min<std::int64_t>(hi, n - 1);
  return {lo, hi};
}

}  // namespace

double ball_integral(const GridFunction& f, Exponent q, const Ball& ball) {
  if (!(ball.radius > 0.0) || !std::isfinite(ball.radius)) {
    throw std::invalid_argument("ball.radius: must be positive and finite");
  }
  const Lattice& lat = f.lattice();
  const double h = lat.spacing();
  const std::int64_t n = lat.cells_per_axis();
  const double rho = radius_units(ball.radius, h);
  const double rho2 = rho * rho;
  const double vx = ball.center[0] / h;

  if (lat.dim() == 1) {
    const AxisWindow win = axis_window(vx, rho, n, n);
    if (q.is_infinite()) {
      double best = 0.0;
      for (std::int64_t i = win.lo; i <= win.hi; ++i) {
        const double du = lat.center_units(i) - vx;
        if (du * du <= rho2) best = std::max(best, std::abs(f[static_cast<std::size_t>(i)]));
      }
      return best;
    }
    NeumaierSum acc;
    for (std::int64_t i = win.lo; i <= win.hi; ++i) {
      const double du = lat.center_units(i) - vx;
      if (du * du <= rho2) acc.add(power_term(f[static_cast<std::size_t>(i)], q));
    }
    return h * acc.value();
  }

  const double vy = ball.center[1] / h;
  const AxisWindow wy = axis_window(vy, rho, n, n);
  if (q.is_infinite()) {
    double best = 0.0;
    for (std::int64_t iy = wy.lo; iy <= wy.hi; ++iy) {
      const double dy = lat.center_units(iy) - vy;
      const AxisWindow wx = axis_window(vx, rho, n, n);
      for (std::int64_t ix = wx.lo; ix <= wx.hi; ++ix) {
        const double dx = lat.center_units(ix) - vx;
        if (dx * dx + dy * dy <= rho2) best = std::max(best, std::abs(f.at(ix, iy)));
      }
    }
    return best;
  }
  NeumaierSum acc;
  for (std::int64_t iy = wy.lo; iy <= wy.hi; ++iy) {
    const double dy = lat.center_units(iy) - vy;
    const AxisWindow wx = axis_window(vx, rho, n, n);
    for (std::int64_t ix = wx.lo; ix <= wx.hi; ++ix) {
      const double dx = lat.center_units(ix) - vx;
      if (dx * dx + dy * dy <= rho2) acc.add(power_term(f.at(ix, iy), q));
    }
  }
  return cell_volume(lat) * acc.value();
}

double cube_integral(const GridFunction& f, Exponent q, const CubePartition& part,
                     std::array<std::int64_t, 2> k) {
  const Lattice& lat = f.lattice();
  const auto [x0, x1] = part.cell_range(k[0]);
  if (lat.dim() == 1) {
    if (q.is_infinite()) {
      double best = 0.0;
      for (std::int64_t i = x0; i <= x1; ++i)
        best = std::max(best, std::abs(f[static_cast<std::size_t>(i)]));
      return best;
    }
    NeumaierSum acc;
    for (std::int64_t i = x0; i <= x1; ++i) acc.add(power_term(f[static_cast<std::size_t>(i)], q));
    return std::pow(lat.spacing() * acc.value(), q.inverse());
  }
  const auto [y0, y1] = part.cell_range(k[1]);
  if (q.is_infinite()) {
    double best = 0.0;
    for (std::int64_t iy = y0; iy <= y1; ++iy)
      for (std::int64_t ix = x0; ix <= x1; ++ix) best = std::max(best, std::abs(f.at(ix, iy)));
    return best;
  }
  NeumaierSum acc;
  for (std::int64_t iy = y0; iy <= y1; ++iy)
    for (std::int64_t ix = x0; ix <= x1; ++ix) acc.add(power_term(f.at(ix, iy), q));
  return std::pow(cell_volume(lat) * acc.value(), q.inverse());
}

double cube_integral(const SummedTable& table, Exponent q, const CubePartition& part,
                     std::array<std::int64_t, 2> k) {
  if (q.is_infinite()) {
    throw std::invalid_argument("cube integral: q = inf has no cumulative-sum form");
  }
  const Lattice& lat = table.lattice();
  const auto [x0, x1] = part.cell_range(k[0]);
  std::int64_t y0 = 0, y1 = 0;
  if (lat.dim() == 2) std::tie(y0, y1) = part.cell_range(k[1]);
  return std::pow(cell_volume(lat) * table.box_sum(x0, x1, y0, y1), q.inverse());
}

int ball_pad_cells(const Lattice& lattice, double r) {
  const double rho = radius_units(r, lattice.spacing());
  return static_cast<int>(ball_row_halfwidth(0, rho * rho));
}

namespace {

// Shared driver: evaluates the ball field at every padded center, with a
// per-cell kernel that sees the f-lattice index of the window center.
template <typename Kernel>
GridFunction ball_field_apply(const GridFunction& f, double r, bool parallel, Kernel&& kernel) {
  const Lattice& lat = f.lattice();
  const int pad = ball_pad_cells(lat, r);
  const Lattice out_lat = lat.padded(pad);
  std::vector<double> out(out_lat.cell_count());
  const std::int64_t n_out = out_lat.cells_per_axis();
  const std::int64_t total = static_cast<std::int64_t>(out_lat.cell_count());
  const auto body = [&](std::int64_t j) {
    const std::int64_t jx = j % n_out;
    const std::int64_t jy = j / n_out;
    out[static_cast<std::size_t>(j)] = kernel(jx - pad, lat.dim() == 2 ? jy - pad : 0);
  };
  if (parallel) {
    par::for_each_index(total, body);
  } else {
    for (std::int64_t j = 0; j < total; ++j) body(j);
  }
  return GridFunction(out_lat, std::move(out));
}

}  // namespace

GridFunction ball_field(const GridFunction& f, Exponent q, double r) {
  const Lattice& lat = f.lattice();
  const double rho = radius_units(r, lat.spacing());
  const double rho2 = rho * rho;
  const std::int64_t w0 = ball_row_halfwidth(0, rho2);
  const double vol = cell_volume(lat);

  if (q.is_infinite()) {
    // Sup over the ball has no prefix form; enumerate rows directly.
    return ball_field_apply(f, r, true, [&](std::int64_t cx, std::int64_t cy) {
      double best = 0.0;
      const std::int64_t n = lat.cells_per_axis();
      for (std::int64_t a = lat.dim() == 2 ? -w0 : 0; a <= (lat.dim() == 2 ? w0 : 0); ++a) {
        const std::int64_t iy = cy + a;
        if (lat.dim() == 2 && (iy < 0 || iy >= n)) continue;
        const std::int64_t wa = lat.dim() == 2 ? ball_row_halfwidth(a, rho2) : w0;
        const std::int64_t x0 = std::max<std::int64_t>(cx - wa, 0);
        const std::int64_t x1 = std::min<std::int64_t>(cx + wa, n - 1);
        for (std::int64_t ix = x0; ix <= x1; ++ix) {
          best = std::max(best, std::abs(f.at(ix, iy)));
        }
      }
      return best;
    });
  }

  const SummedTable table(f, q);
  if (lat.dim() == 1) {
    return ball_field_apply(f, r, true, [&](std::int64_t cx, std::int64_t) {
      return vol * table.box_sum(cx - w0, cx + w0);
    });
  }
  // Precompute per-row half-widths once; rows are summed in ascending order.
  std::vector<std::int64_t> halfw(static_cast<std::size_t>(2 * w0 + 1));
  for (std::int64_t a = -w0; a <= w0; ++a) {
    halfw[static_cast<std::size_t>(a + w0)] = ball_row_halfwidth(a, rho2);
  }
  return ball_field_apply(f, r, true, [&](std::int64_t cx, std::int64_t cy) {
    NeumaierSum acc;
    for (std::int64_t a = -w0; a <= w0; ++a) {
      const std::int64_t wa = halfw[static_cast<std::size_t>(a + w0)];
      acc.add(table.box_sum(cx - wa, cx + wa, cy + a, cy + a));
    }
    return vol * acc.value();
  });
}

GridFunction ball_field_direct(const GridFunction& f, Exponent q, double r) {
  const Lattice& lat = f.lattice();
  const double rho = radius_units(r, lat.spacing());
  const double rho2 = rho * rho;
  const std::int64_t w0 = ball_row_halfwidth(0, rho2);
  const double vol = cell_volume(lat);
  const std::int64_t n = lat.cells_per_axis();

  return ball_field_apply(f, r, false, [&](std::int64_t cx, std::int64_t cy) {
    if (q.is_infinite()) {
      double best = 0.0;
      for (std::int64_t a = lat.dim() == 2 ? -w0 : 0; a <= (lat.dim() == 2 ? w0 : 0); ++a) {
        const std::int64_t iy = cy + a;
        if (lat.dim() == 2 && (iy < 0 || iy >= n)) continue;
        const std::int64_t wa = lat.dim() == 2 ? ball_row_halfwidth(a, rho2) : w0;
        for (std::int64_t ix = std::max<std::int64_t>(cx - wa, 0);
             ix <= std::min<std::int64_t>(cx + wa, n - 1); ++ix) {
          best = std::max(best, std::abs(f.at(ix, iy)));
        }
      }
      return best;
    }
    NeumaierSum acc;
    for (std::int64_t a = lat.dim() == 2 ? -w0 : 0; a <= (lat.dim() == 2 ? w0 : 0); ++a) {
      const std::int64_t iy = cy + a;
      if (lat.dim() == 2 && (iy < 0 || iy >= n)) continue;
      const std::int64_t wa = lat.dim() == 2 ? ball_row_halfwidth(a, rho2) : w0;
      for (std::int64_t ix = std::max<std::int64_t>(cx - wa, 0);
           ix <= std::min<std::int64_t>(cx + wa, n - 1); ++ix) {
        acc.add(power_term(f.at(ix, iy), q));
      }
    }
    return vol * acc.value();
  });
}

}  // namespace fofana
