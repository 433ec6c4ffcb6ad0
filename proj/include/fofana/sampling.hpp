#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "fofana/lattice.hpp"

namespace fofana {

struct ConstantSpec {
  double value = 1.0;
};

// 1 on cells whose center lies strictly inside the ball, 0 elsewhere.
struct IndicatorBallSpec {
  std::array<double, 2> center{0.0, 0.0};
  double radius = 1.0;
};

struct GaussianSpec {
  double sigma = 1.0;
};

// min(eps^(-d/alpha), |x|^(-d/alpha)): the canonical power tail, truncated
// near the origin so samples stay finite.
struct PowerTailSpec {
  double alpha = 2.0;
  double eps = 0.5;
};

// Piecewise-constant blocks with values in [-1, 1) drawn from a counter-based
// hash of (seed, block index), so sampling order and thread count are
// irrelevant. `block_cells` counts cells at the lattice the spec was created
// for; `block_len`, when set, pins the physical block length so the same
// function can be resampled at finer spacings.
struct StepRandomSpec {
  std::uint64_t seed = 1;
  int block_cells = 4;
  std::optional<double> block_len;
};

using FunctionSpec =
    std::variant<ConstantSpec, IndicatorBallSpec, GaussianSpec, PowerTailSpec, StepRandomSpec>;

GridFunction sample(const FunctionSpec& spec, const Lattice& lattice);

std::string describe(const FunctionSpec& spec);

// Counter-based generator used by StepRandomSpec; exposed for tests.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace fofana
