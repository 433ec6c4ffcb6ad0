#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fofana/lattice.hpp"
#include "fofana/sampling.hpp"

namespace fofana {

// Named input families used by the verification suites. Generation is a pure
// function of (seed, base lattice, profile, alphas); step-random members pin
// the physical block length at generation time, so resampling the same
// corpus on a refined lattice evaluates the same functions.
enum class Profile { kSmoke, kStandard, kRefinement };

Profile parse_profile(const std::string& text);
std::string to_string(Profile profile);

struct CorpusMember {
  std::string id;
  FunctionSpec spec;
  Lattice lattice;
};

struct Corpus {
  std::uint64_t seed = 0;
  Profile profile = Profile::kStandard;
  std::vector<CorpusMember> members;
};

// alphas: tail exponents to include as slowly decaying members, typically the
// weight exponents under test. Empty selects the default {2}.
Corpus generate_corpus(std::uint64_t seed, const Lattice& base, Profile profile,
                       const std::vector<double>& alphas = {});

GridFunction realize(const CorpusMember& member);

}  // namespace fofana
