#include "fofana/corpus.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fofana {

Profile parse_profile(const std::string& text) {
  if (text == "smoke") return Profile::kSmoke;
  if (text == "standard") return Profile::kStandard;
  if (text == "refinement") return Profile::kRefinement;
  throw std::invalid_argument("unknown profile '" + text +
                              "' (expected smoke, standard, or refinement)");
}

std::string to_string(Profile profile) {
  switch (profile) {
    case Profile::kSmoke:
      return "smoke";
    case Profile::kStandard:
      return "standard";
    case Profile::kRefinement:
      return "refinement";
  }
  return "standard";
}

namespace {

std::string format_scale(double v) {
  char buf[32];
  if (v == std::floor(v) && std::abs(v) < 1e6) {
    std::snprintf(buf, sizeof(buf), "%d", static_cast<int>(v));
  } else {
    std::snprintf(buf, sizeof(buf), "%g", v);
    for (char& c : buf) {
      if (c == '.') c = 'p';
    }
  }
  return buf;
}

std::vector<CorpusMember> standard_members(std::uint64_t seed, const Lattice& base,
                                           const std::vector<double>& alphas) {
  const double h = base.spacing();
  std::vector<CorpusMember> out;
  out.push_back({"const-one", ConstantSpec{1.0}, base});
  out.push_back({"const-tenth", ConstantSpec{0.1}, base});
  // A ball too small to reach any neighbor center: a single lit cell at the
  // base spacing, the same physical bump when resampled finer.
  out.push_back({"spike", IndicatorBallSpec{{0.5 * h, 0.5 * h}, 0.51 * h}, base});
  for (double r0 : {0.25, 0.5, 1.0, 2.0}) {
    out.push_back({"ball-" + format_scale(r0), IndicatorBallSpec{{0.0, 0.0}, r0}, base});
  }
  for (double sigma : {0.5, 1.0, 2.0}) {
    out.push_back({"gauss-" + format_scale(sigma), GaussianSpec{sigma}, base});
  }
  std::vector<double> tails = alphas.empty() ? std::vector<double>{2.0} : alphas;
  for (double alpha : tails) {
    out.push_back({"ptail-a" + format_scale(alpha), PowerTailSpec{alpha, h}, base});
  }
  for (int k = 0; k < 2; ++k) {
    StepRandomSpec spec;
    spec.seed = splitmix64(seed ^ static_cast<std::uint64_t>(k + 1));
    spec.block_cells = 4;
    spec.block_len = 4.0 * h;
    out.push_back({std::string("step-") + (k == 0 ? "a" : "b"), spec, base});
  }
  return out;
}

}  // namespace

Corpus generate_corpus(std::uint64_t seed, const Lattice& base, Profile profile,
                       const std::vector<double>& alphas) {
  Corpus corpus;
  corpus.seed = seed;
  corpus.profile = profile;
  const std::vector<CorpusMember> full = standard_members(seed, base, alphas);
  switch (profile) {
    case Profile::kSmoke:
      for (const CorpusMember& m : full) {
        if (m.id == "const-one" || m.id == "spike" || m.id == "ball-1" ||
            m.id == "gauss-1" || m.id == "step-a" || m.id.rfind("ptail-", 0) == 0) {
          if (corpus.members.size() < 6) corpus.members.push_back(m);
        }
      }
      break;
    case Profile::kStandard:
      corpus.members = full;
      break;
    case Profile::kRefinement: {
      const Lattice fine = base.refined();
      for (const CorpusMember& m : full) {
        corpus.members.push_back(m);
        corpus.members.push_back({m.id + "@fine", m.spec, fine});
      }
      break;
    }
  }
  return corpus;
}

GridFunction realize(const CorpusMember& member) { return sample(member.spec, member.lattice); }

}  // namespace fofana
