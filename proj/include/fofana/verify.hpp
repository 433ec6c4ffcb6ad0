#pragma once

#include <vector>

#include "fofana/corpus.hpp"
#include "fofana/exponents.hpp"
#include "fofana/lattice.hpp"
#include "fofana/maximal.hpp"
#include "fofana/norms.hpp"
#include "fofana/radius_grid.hpp"
#include "fofana/report.hpp"
#include "fofana/weights.hpp"

namespace fofana {

// Shared knobs of the verification suites. Caps are configuration defaults
// chosen generously above dimensional-analysis expectations, not claims
// about sharp constants.
struct VerifyConfig {
  double cap_embeddings = 100.0;
  double cap_indicator = 16.0;
  double cap_boundedness = 100.0;
  double drift_bound = 0.10;      // relative drift of C_emp under h -> h/2
  double row_drift_bound = 0.05;  // per-row drift under radius-grid refinement
  bool refine = true;             // resample at h/2 inside checks
  bool experimental_q1 = false;   // allow q = 1 runs with no pass semantics
  MaximalConfig::Method method = MaximalConfig::Method::kNaive;
};

// Ratio amalgam_continuous / (r^(d/p) amalgam_discrete) over (member, r).
// Pass: max/min spread <= 4^d at both resolutions and C_emp drift within
// bound. Radii must be whole multiples of the lattice spacing.
CheckReport check_norm_equivalence(const Corpus& corpus, ExponentPair qp, const RadiusGrid& radii,
                                   const VerifyConfig& cfg);

// Monotonicity of the weighted amalgam scale in both exponents. Per member,
// two rows: norm(q1, p2) / norm(q2, p2) and norm(q1, p2) / norm(q1, p1).
// Requires q1 <= q2 <= p2 and q1 <= p1 <= p2; the weight must pass the class
// check for (q2, p2) and (q1, p1), otherwise the report is vacuous.
CheckReport check_embeddings(const Corpus& corpus, Exponent q1, Exponent q2, Exponent p1,
                             Exponent p2, const WeightFunction& w, const RadiusGrid& radii,
                             const VerifyConfig& cfg);

// phi(r0) * generalized Fofana norm of the ball indicator, one row per r0.
// Pass: spread of the rows <= cap and every row stable within
// row_drift_bound when the radius grid is refined (a superset, so each
// supremum can only grow).
CheckReport check_ball_indicator(const WeightFunction& w, ExponentPair qp,
                                 const std::vector<double>& r0_list, const RadiusGrid& radii,
                                 const Lattice& lattice, const VerifyConfig& cfg);

// Integral of (Mf)^q over a ball against the integral of |f|^q weighted by
// the maximal function of the ball indicator (analytic in one dimension).
// Pass: every ratio finite and C_emp stable under h -> h/2. Requires q > 1.
CheckReport check_fefferman_stein(const Corpus& corpus, Exponent q, const std::vector<Ball>& balls,
                                  const RadiusGrid& radii, const VerifyConfig& cfg);

// Ratio of generalized Fofana norms of Mf and f per corpus member. Vacuous
// when the weight fails the class check; not-applicable when the tail
// condition diverges (the negative control) or on experimental q = 1 runs.
// Pass: C_emp <= cap and drift within bound.
CheckReport check_maximal_boundedness(const Corpus& corpus, ExponentPair qp,
                                      const WeightFunction& w, const RadiusGrid& radii,
                                      const VerifyConfig& cfg);

}  // namespace fofana
