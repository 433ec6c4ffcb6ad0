#include <doctest.h>

#include <cmath>
#include <vector>

#include "fofana/lattice.hpp"
#include "fofana/norms.hpp"
#include "fofana/sampling.hpp"

using namespace fofana;

namespace {

// Cells of the full lattice inside a ball of radius r, by the same closed
// index-space membership the integrals use.
std::int64_t ball_cell_count(int dim, double r, double h) {
  const double u = radius_units(r, h);
  const std::int64_t m = static_cast<std::int64_t>(std::floor(u));
  if (dim == 1) return 2 * m + 1;
  std::int64_t count = 0;
  for (std::int64_t a = -m; a <= m; ++a) {
    const std::int64_t b = ball_row_halfwidth(std::llabs(a), u * u);
    if (b >= 0) count += 2 * b + 1;
  }
  return count;
}

}  // namespace

TEST_CASE("lebesgue norm examples") {
  const Lattice lat = Lattice::make(1, 0.5, 1.0);
  const GridFunction f(lat, {0.0, 3.0, -4.0, 0.0});
  CHECK(lebesgue_norm(f, Exponent::of(1.0)) == 3.5);
  CHECK(lebesgue_norm(f, Exponent::of(2.0)) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-15));
  CHECK(lebesgue_norm(f, Exponent::infinity()) == 4.0);
}

TEST_CASE("amalgam with p = q reduces to a ball-measure multiple of Lebesgue") {
  for (int dim : {1, 2}) {
    const Lattice lat = Lattice::make(dim, 0.25, 2.0);
    const GridFunction f = sample(StepRandomSpec{3, 2, {}}, lat);
    const double r = 0.8;
    const double measure =
        static_cast<double>(ball_cell_count(dim, r, lat.spacing())) *
        std::pow(lat.spacing(), dim);
    for (double q : {1.0, 2.0}) {
      const double lhs = amalgam_continuous(f, r, ExponentPair(Exponent::of(q), Exponent::of(q)));
      const double rhs = std::pow(measure, 1.0 / q) * lebesgue_norm(f, Exponent::of(q));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("amalgam of a ball indicator converges to the closed form") {
  const double exact = std::sqrt(16.0 / 3.0);
  const ExponentPair qp(Exponent::of(1.0), Exponent::of(2.0));
  const IndicatorBallSpec spec{{0.0, 0.0}, 1.0};

  const double coarse =
      amalgam_continuous(sample(spec, Lattice::make(1, 0.01, 2.0)), 1.0, qp);
  const double fine =
      amalgam_continuous(sample(spec, Lattice::make(1, 0.0025, 2.0)), 1.0, qp);
  CHECK(std::abs(coarse - exact) / exact < 0.02);
  CHECK(std::abs(fine - exact) / exact < 0.005);
  CHECK(std::abs(fine - exact) < std::abs(coarse - exact));
}

TEST_CASE("discrete amalgam examples") {
  const Lattice lat = Lattice::make(1, 0.5, 1.0);
  const GridFunction f(lat, {0.0, 3.0, -4.0, 0.0});

  CHECK(amalgam_discrete(f, 0.5, ExponentPair(Exponent::infinity(), Exponent::infinity())) == 4.0);
  // Cubes [-1,0) and [0,1): cell masses 0.5*9 and 0.5*16, max picks the second.
  CHECK(amalgam_discrete(f, 1.0, ExponentPair(Exponent::of(2.0), Exponent::infinity())) ==
        doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
  CHECK_THROWS_AS(amalgam_discrete(f, 0.7, ExponentPair(Exponent::of(2.0), Exponent::of(2.0))),
                  std::invalid_argument);

  for (int dim : {1, 2}) {
    const Lattice box = Lattice::make(dim, 0.125, 2.0);
    const GridFunction g = sample(StepRandomSpec{9, 3, {}}, box);
    for (double scale : {0.125, 0.5, 1.0}) {
      for (double q : {1.0, 2.0}) {
        CHECK(amalgam_discrete(g, scale, ExponentPair(Exponent::of(q), Exponent::of(q))) ==
              doctest::Approx(lebesgue_norm(g, Exponent::of(q))).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("discrete amalgam is non-increasing in the outer exponent") {
  const std::vector<Exponent> ps{Exponent::of(1.0),  Exponent::of(1.5), Exponent::of(2.0),
                                 Exponent::of(3.0),  Exponent::of(4.0), Exponent::of(8.0),
                                 Exponent::infinity()};
  for (int dim : {1, 2}) {
    const Lattice lat = Lattice::make(dim, 0.125, 2.0);
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      const GridFunction f = sample(StepRandomSpec{seed, 3, {}}, lat);
      double prev = std::numeric_limits<double>::infinity();
      for (const Exponent& p : ps) {
        const double v = amalgam_discrete(f, 0.5, ExponentPair(Exponent::of(1.0), p));
        CHECK(v <= prev);
        prev = v;
      }
    }
  }
}

TEST_CASE("cube masses obey the Holder comparison") {
  const Lattice lat = Lattice::make(2, 0.125, 2.0);
  const GridFunction f = sample(StepRandomSpec{21, 3, {}}, lat);
  const double scale = 0.5;
  const CubePartition part = CubePartition::make(lat, scale);
  for (std::int64_t ky = part.k_min(); ky <= part.k_max(); ++ky) {
    for (std::int64_t kx = part.k_min(); kx <= part.k_max(); ++kx) {
      const double q1 = cube_integral(f, Exponent::of(1.0), part, {kx, ky});
      const double q2 = cube_integral(f, Exponent::of(2.0), part, {kx, ky});
      const double qi = cube_integral(f, Exponent::infinity(), part, {kx, ky});
      CHECK(q1 <= std::pow(scale * scale, 0.5) * q2 + 1e-12);
      CHECK(q2 <= std::pow(scale * scale, 0.5) * qi + 1e-12);
    }
  }
}

TEST_CASE("power-weight norm collapses onto the plain one bit for bit") {
  const RadiusGrid radii = RadiusGrid::explicit_list({0.25, 0.5, 1.0, 2.0});
  const ExponentPair qp(Exponent::of(1.0), Exponent::of(4.0));
  for (int dim : {1, 2}) {
    const Lattice lat = Lattice::make(dim, 0.125, 2.0);
    const GridFunction f = sample(GaussianSpec{1.0}, lat);
    for (double alpha : {1.0, 2.0, 4.0}) {
      const NormValue plain = fofana_norm(f, qp, alpha, radii);
      const NormValue general =
          generalized_fofana_norm(f, qp, WeightFunction::power(dim, alpha), radii);
      CHECK(plain.value == general.value);
      CHECK(plain.argmax_r == general.argmax_r);
      REQUIRE(plain.trace.size() == general.trace.size());
      for (std::size_t i = 0; i < plain.trace.size(); ++i) {
        CHECK(plain.trace[i].first == general.trace[i].first);
        CHECK(plain.trace[i].second == general.trace[i].second);
      }
    }
  }
}

TEST_CASE("morrey norm is the p = inf column of the continuous family") {
  const RadiusGrid radii = RadiusGrid::explicit_list({0.25, 0.5, 1.0, 2.0});
  const Lattice lat = Lattice::make(1, 0.0625, 2.0);
  const GridFunction f = sample(PowerTailSpec{2.0, 0.1}, lat);
  const WeightFunction w = WeightFunction::power_log(1, 2.0, 0.5);
  const NormValue m = morrey_norm(f, Exponent::of(2.0), w, radii);
  const NormValue g = generalized_fofana_norm(
      f, ExponentPair(Exponent::of(2.0), Exponent::infinity()), w, radii);
  CHECK(m.value == g.value);
  CHECK(m.argmax_r == g.argmax_r);
}

TEST_CASE("norm axioms on random inputs") {
  const RadiusGrid radii = RadiusGrid::explicit_list({0.25, 0.5, 1.0, 2.0});
  const ExponentPair qp(Exponent::of(1.0), Exponent::of(4.0));
  const Lattice lat = Lattice::make(1, 0.125, 2.0);
  const GridFunction f = sample(StepRandomSpec{31, 3, {}}, lat);
  const GridFunction g = sample(StepRandomSpec{32, 3, {}}, lat);

  std::vector<double> sum(f.values());
  std::vector<double> scaled(f.values());
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum[i] += g.values()[i];
    scaled[i] *= 2.0;
  }
  const GridFunction fg(lat, sum);
  const GridFunction f2(lat, scaled);

  const double nf = fofana_norm(f, qp, 2.0, radii).value;
  const double ng = fofana_norm(g, qp, 2.0, radii).value;
  const double nfg = fofana_norm(fg, qp, 2.0, radii).value;
  const double nf2 = fofana_norm(f2, qp, 2.0, radii).value;
  CHECK(nf > 0.0);
  CHECK(nfg <= nf + ng + 1e-12);
  CHECK(nf2 == doctest::Approx(2.0 * nf).epsilon(1e-12));

  const GridFunction zero = sample(ConstantSpec{0.0}, lat);
  CHECK(fofana_norm(zero, qp, 2.0, radii).value == 0.0);
  CHECK(amalgam_continuous(zero, 0.5, qp) == 0.0);
  CHECK(amalgam_discrete(zero, 0.5, qp) == 0.0);
}

TEST_CASE("norm traces record the scale sweep") {
  const RadiusGrid radii = RadiusGrid::explicit_list({0.25, 0.5, 1.0, 2.0});
  const Lattice lat = Lattice::make(1, 0.125, 2.0);
  const GridFunction f = sample(GaussianSpec{0.5}, lat);
  const NormValue nv = fofana_norm(f, ExponentPair(Exponent::of(1.0), Exponent::of(4.0)), 2.0,
                                   radii);
  REQUIRE(nv.trace.size() == radii.radii().size());
  bool attained = false;
  for (const auto& [r, v] : nv.trace) {
    CHECK(v <= nv.value);
    if (r == nv.argmax_r) {
      CHECK(v == nv.value);
      attained = true;
    }
  }
  CHECK(attained);
}
