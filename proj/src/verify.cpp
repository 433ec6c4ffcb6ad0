#include "fofana/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fofana/accumulate.hpp"
#include "fofana/integrals.hpp"

namespace fofana {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double safe_ratio(double lhs, double rhs) {
  if (rhs != 0.0) return lhs / rhs;
  return lhs == 0.0 ? kNaN : kInf;
}

// Grid of scales for the weight-class precondition, spanning one octave
// beyond the radius grid on both sides.
RadiusGrid class_grid(const RadiusGrid& radii) {
  return RadiusGrid::geometric(radii.radii().front() / 4.0, radii.radii().back() * 4.0, 64);
}

struct RatioStats {
  double max_ratio = -kInf;
  double min_ratio = kInf;
  bool any = false;

  void add(double ratio) {
    any = true;
    max_ratio = std::max(max_ratio, ratio);
    min_ratio = std::min(min_ratio, ratio);
  }
  double spread() const { return any ? max_ratio / min_ratio : kNaN; }
};

void finalize_from_rows(CheckReport& rep) {
  double worst = -kInf;
  bool any = false;
  for (const CheckRow& row : rep.rows) {
    if (std::isnan(row.ratio)) continue;
    worst = std::max(worst, row.ratio);
    any = true;
  }
  rep.c_emp = any ? worst : kNaN;
}

void apply_refinement_drift(CheckReport& rep, double refined_c_emp, double bound) {
  rep.c_emp_refined = refined_c_emp;
  if (std::isfinite(rep.c_emp) && rep.c_emp != 0.0 && std::isfinite(refined_c_emp)) {
    rep.drift = std::abs(refined_c_emp - rep.c_emp) / rep.c_emp;
    rep.pass = rep.pass && *rep.drift <= bound;
  } else {
    rep.drift = kInf;
    rep.pass = false;
  }
  rep.drift_bound = bound;
}

int corpus_dim(const Corpus& corpus) {
  if (corpus.members.empty()) throw std::invalid_argument("verify: corpus is empty");
  const int dim = corpus.members.front().lattice.dim();
  for (const CorpusMember& m : corpus.members) {
    if (m.lattice.dim() != dim) {
      throw std::invalid_argument("verify: corpus members mix dimensions");
    }
  }
  return dim;
}

}  // namespace

CheckReport check_norm_equivalence(const Corpus& corpus, ExponentPair qp, const RadiusGrid& radii,
                                   const VerifyConfig& cfg) {
  const int dim = corpus_dim(corpus);
  CheckReport rep;
  rep.check_id = "norm-equivalence";
  rep.cap = std::pow(4.0, dim);
  rep.drift_bound = cfg.drift_bound;
  const double p_inv = qp.p.inverse();

  const auto spread_pass = [&](const Lattice& lat, const GridFunction& f,
                               const CorpusMember& member, bool record, RatioStats& stats) {
    const RadiusGrid aligned = radii.snapped_to(lat.spacing());
    for (double r : aligned.radii()) {
      const double cont = amalgam_continuous(f, r, qp);
      const double disc = amalgam_discrete(f, r, qp);
      const double scaled = std::pow(r, dim * p_inv) * disc;
      if (cont == 0.0 && scaled == 0.0) {
        if (record) ++rep.skipped;
        continue;
      }
      const double ratio = safe_ratio(cont, scaled);
      stats.add(ratio);
      if (record) {
        CheckRow row;
        row.case_id = member.id;
        row.input = describe(member.spec);
        row.r = r;
        row.lhs = cont;
        row.rhs = scaled;
        row.ratio = ratio;
        row.pass = std::isfinite(ratio);
        rep.rows.push_back(row);
      }
    }
  };

  RatioStats base;
  for (const CorpusMember& m : corpus.members) {
    spread_pass(m.lattice, realize(m), m, true, base);
  }
  finalize_from_rows(rep);
  rep.extras["min_ratio"] = base.min_ratio;
  rep.extras["spread"] = base.spread();
  rep.pass = std::isfinite(base.spread()) && base.spread() <= rep.cap;

  if (cfg.refine) {
    RatioStats fine;
    for (const CorpusMember& m : corpus.members) {
      const Lattice refined = m.lattice.refined();
      spread_pass(refined, sample(m.spec, refined), m, false, fine);
    }
    rep.extras["min_ratio_refined"] = fine.min_ratio;
    rep.extras["spread_refined"] = fine.spread();
    rep.pass = rep.pass && std::isfinite(fine.spread()) && fine.spread() <= rep.cap;
    apply_refinement_drift(rep, fine.max_ratio, cfg.drift_bound);
  }
  return rep;
}

CheckReport check_embeddings(const Corpus& corpus, Exponent q1, Exponent q2, Exponent p1,
                             Exponent p2, const WeightFunction& w, const RadiusGrid& radii,
                             const VerifyConfig& cfg) {
  if (!(q1 <= q2 && q2 <= p2 && q1 <= p1 && p1 <= p2)) {
    throw std::invalid_argument("check_embeddings: need q1 <= q2 <= p2 and q1 <= p1 <= p2");
  }
  corpus_dim(corpus);
  CheckReport rep;
  rep.check_id = "embeddings";
  rep.cap = cfg.cap_embeddings;
  rep.drift_bound = cfg.drift_bound;

  const RadiusGrid t_grid = class_grid(radii);
  const ClassCheckResult class_a = check_class(w, q2, p2, t_grid);
  const ClassCheckResult class_b = check_class(w, q1, p1, t_grid);
  rep.extras["class_c_dec_q2p2"] = class_a.c_dec;
  rep.extras["class_c_inc_q2p2"] = class_a.c_inc;
  rep.extras["class_c_dec_q1p1"] = class_b.c_dec;
  rep.extras["class_c_inc_q1p1"] = class_b.c_inc;
  if (!class_a.pass || !class_b.pass) {
    rep.status = CheckStatus::kVacuous;
    rep.note = std::string("weight fails the class check for ") +
               (!class_a.pass ? "(q2, p2)" : "(q1, p1)");
    rep.pass = false;
    return rep;
  }

  const auto run = [&](bool record, double& worst) {
    for (const CorpusMember& m : corpus.members) {
      const Lattice lat = record ? m.lattice : m.lattice.refined();
      const GridFunction f = record ? realize(m) : sample(m.spec, lat);
      const double n_q1p2 = generalized_fofana_norm(f, ExponentPair(q1, p2), w, radii).value;
      const double n_q2p2 = generalized_fofana_norm(f, ExponentPair(q2, p2), w, radii).value;
      const double n_q1p1 = generalized_fofana_norm(f, ExponentPair(q1, p1), w, radii).value;
      const struct {
        const char* tag;
        double lhs, rhs;
      } parts[2] = {{"q-mono", n_q1p2, n_q2p2}, {"p-mono", n_q1p2, n_q1p1}};
      for (const auto& part : parts) {
        if (part.lhs == 0.0 && part.rhs == 0.0) {
          if (record) ++rep.skipped;
          continue;
        }
        const double ratio = safe_ratio(part.lhs, part.rhs);
        if (!std::isnan(ratio)) worst = std::max(worst, ratio);
        if (record) {
          CheckRow row;
          row.case_id = m.id + ":" + part.tag;
          row.input = describe(m.spec);
          row.lhs = part.lhs;
          row.rhs = part.rhs;
          row.ratio = ratio;
          row.pass = std::isfinite(ratio) && ratio <= rep.cap;
          rep.rows.push_back(row);
        }
      }
    }
  };

  double worst = -kInf;
  run(true, worst);
  rep.c_emp = worst;
  rep.pass = std::isfinite(worst) && worst <= rep.cap;
  if (cfg.refine) {
    double worst_fine = -kInf;
    run(false, worst_fine);
    apply_refinement_drift(rep, worst_fine, cfg.drift_bound);
  }
  return rep;
}

CheckReport check_ball_indicator(const WeightFunction& w, ExponentPair qp,
                                 const std::vector<double>& r0_list, const RadiusGrid& radii,
                                 const Lattice& lattice, const VerifyConfig& cfg) {
  if (r0_list.empty()) throw std::invalid_argument("check_ball_indicator: empty r0 list");
  CheckReport rep;
  rep.check_id = "ball-indicator";
  rep.cap = cfg.cap_indicator;
  rep.drift_bound = cfg.row_drift_bound;

  const ClassCheckResult cls = check_class(w, qp.q, qp.p, class_grid(radii));
  rep.extras["class_c_dec"] = cls.c_dec;
  rep.extras["class_c_inc"] = cls.c_inc;
  if (!cls.pass) {
    rep.status = CheckStatus::kVacuous;
    rep.note = "weight fails the class check for (q, p)";
    rep.pass = false;
    return rep;
  }

  const RadiusGrid refined = radii.refined();
  RatioStats stats;
  double worst_drift = 0.0;
  for (double r0 : r0_list) {
    const IndicatorBallSpec spec{{0.0, 0.0}, r0};
    const GridFunction f = sample(FunctionSpec(spec), lattice);
    const double base = generalized_fofana_norm(f, qp, w, radii).value;
    const double fine = generalized_fofana_norm(f, qp, w, refined).value;
    const double ratio = w(r0) * base;
    const double row_drift = base != 0.0 ? std::abs(fine - base) / base : kInf;
    worst_drift = std::max(worst_drift, row_drift);
    stats.add(ratio);

    CheckRow row;
    row.case_id = "r0=" + std::to_string(r0);
    row.input = describe(FunctionSpec(spec));
    row.r = r0;
    row.lhs = base;
    row.rhs = 1.0 / w(r0);
    row.ratio = ratio;
    row.pass = std::isfinite(ratio) && row_drift <= cfg.row_drift_bound;
    rep.rows.push_back(row);
  }
  finalize_from_rows(rep);
  rep.extras["min_ratio"] = stats.min_ratio;
  rep.extras["spread"] = stats.spread();
  rep.drift = worst_drift;
  bool rows_ok = true;
  for (const CheckRow& row : rep.rows) rows_ok = rows_ok && row.pass;
  rep.pass = rows_ok && std::isfinite(stats.spread()) && stats.spread() <= rep.cap;
  return rep;
}

CheckReport check_fefferman_stein(const Corpus& corpus, Exponent q, const std::vector<Ball>& balls,
                                  const RadiusGrid& radii, const VerifyConfig& cfg) {
  if (q.is_infinite() || q.value() <= 1.0) {
    throw std::invalid_argument("check_fefferman_stein: requires finite q > 1");
  }
  if (balls.empty()) throw std::invalid_argument("check_fefferman_stein: empty ball list");
  const int dim = corpus_dim(corpus);
  CheckReport rep;
  rep.check_id = "fefferman-stein";
  rep.cap = kInf;
  rep.drift_bound = cfg.drift_bound;

  const auto weighted_rhs = [&](const GridFunction& f, const Ball& ball,
                                const MaximalConfig& mcfg) {
    const Lattice& lat = f.lattice();
    NeumaierSum acc;
    if (dim == 1) {
      for (std::int64_t i = 0; i < lat.cells_per_axis(); ++i) {
        const double v = std::abs(f[static_cast<std::size_t>(i)]);
        if (v == 0.0) continue;
        const double weight =
            indicator_maximal_oracle_1d(ball.center[0], ball.radius, lat.center(i));
        acc.add(std::pow(v, q.value()) * weight);
      }
    } else {
      const GridFunction chi =
          sample(FunctionSpec(IndicatorBallSpec{ball.center, ball.radius}), lat);
      const GridFunction mchi = maximal_function(chi, mcfg);
      const std::int64_t n = lat.cells_per_axis();
      for (std::int64_t iy = 0; iy < n; ++iy) {
        for (std::int64_t ix = 0; ix < n; ++ix) {
          const double v = std::abs(f.at(ix, iy));
          if (v == 0.0) continue;
          acc.add(std::pow(v, q.value()) * mchi.at(ix, iy));
        }
      }
    }
    const double cell = std::pow(lat.spacing(), dim);
    return cell * acc.value();
  };

  const auto run = [&](bool record, double& worst) {
    for (const CorpusMember& m : corpus.members) {
      const Lattice lat = record ? m.lattice : m.lattice.refined();
      const GridFunction f = record ? realize(m) : sample(m.spec, lat);
      const MaximalConfig mcfg = MaximalConfig::make(lat, radii, cfg.method);
      const GridFunction mf = maximal_function(f, mcfg);
      for (const Ball& ball : balls) {
        const double lhs = ball_integral(mf, q, ball);
        const double rhs = weighted_rhs(f, ball, mcfg);
        if (lhs == 0.0 && rhs == 0.0) {
          if (record) ++rep.skipped;
          continue;
        }
        const double ratio = safe_ratio(lhs, rhs);
        if (!std::isnan(ratio)) worst = std::max(worst, ratio);
        if (record) {
          CheckRow row;
          row.case_id = m.id;
          row.input = describe(m.spec);
          row.r = ball.radius;
          row.lhs = lhs;
          row.rhs = rhs;
          row.ratio = ratio;
          row.pass = std::isfinite(ratio);
          rep.rows.push_back(row);
        }
      }
    }
  };

  double worst = -kInf;
  run(true, worst);
  rep.c_emp = worst;
  rep.pass = std::isfinite(worst);
  if (cfg.refine) {
    double worst_fine = -kInf;
    run(false, worst_fine);
    apply_refinement_drift(rep, worst_fine, cfg.drift_bound);
  }
  return rep;
}

CheckReport check_maximal_boundedness(const Corpus& corpus, ExponentPair qp,
                                      const WeightFunction& w, const RadiusGrid& radii,
                                      const VerifyConfig& cfg) {
  const int dim = corpus_dim(corpus);
  if (w.dim() != dim) {
    throw std::invalid_argument("check_maximal_boundedness: weight dimension mismatch");
  }
  const bool experimental = !qp.q.is_infinite() && qp.q.value() == 1.0;
  if (experimental && !cfg.experimental_q1) {
    throw std::invalid_argument(
        "check_maximal_boundedness: q = 1 is outside the verified regime; set the experimental "
        "flag to explore it");
  }
  CheckReport rep;
  rep.check_id = "maximal-boundedness";
  rep.cap = cfg.cap_boundedness;
  rep.drift_bound = cfg.drift_bound;

  const RadiusGrid t_grid = class_grid(radii);
  const ClassCheckResult cls = check_class(w, qp.q, qp.p, t_grid);
  rep.extras["class_c_dec"] = cls.c_dec;
  rep.extras["class_c_inc"] = cls.c_inc;
  if (!cls.pass) {
    rep.status = CheckStatus::kVacuous;
    rep.note = "weight fails the class check for (q, p)";
    rep.pass = false;
    return rep;
  }

  std::vector<double> probes;
  const std::vector<double>& rs = radii.radii();
  const std::size_t stride = std::max<std::size_t>(1, rs.size() / 8);
  for (std::size_t i = 0; i < rs.size(); i += stride) probes.push_back(rs[i]);
  const double t_max = 256.0 * rs.back();
  const NakaiResult nakai = nakai_constant(w, qp.q, qp.p, dim, RadiusGrid::explicit_list(probes),
                                           t_max, cfg.experimental_q1);
  if (nakai.divergent) {
    rep.status = CheckStatus::kNotApplicable;
    rep.note = "tail condition divergent for this weight; boundedness is not asserted";
    rep.pass = false;
    return rep;
  }
  rep.extras["nakai_c_hat"] = *nakai.c_hat;

  const auto run = [&](bool record, double& worst) {
    for (const CorpusMember& m : corpus.members) {
      const Lattice lat = record ? m.lattice : m.lattice.refined();
      const GridFunction f = record ? realize(m) : sample(m.spec, lat);
      const MaximalConfig mcfg = MaximalConfig::make(lat, radii, cfg.method);
      const GridFunction mf = maximal_function(f, mcfg);
      const double nf = generalized_fofana_norm(f, qp, w, radii).value;
      const double nmf = generalized_fofana_norm(mf, qp, w, radii).value;
      if (nf == 0.0 && nmf == 0.0) {
        if (record) ++rep.skipped;
        continue;
      }
      const double ratio = safe_ratio(nmf, nf);
      if (!std::isnan(ratio)) worst = std::max(worst, ratio);
      if (record) {
        CheckRow row;
        row.case_id = m.id;
        row.input = describe(m.spec);
        row.lhs = nmf;
        row.rhs = nf;
        row.ratio = ratio;
        row.pass = std::isfinite(ratio) && ratio <= rep.cap;
        rep.rows.push_back(row);
      }
    }
  };

  double worst = -kInf;
  run(true, worst);
  rep.c_emp = worst;
  rep.pass = std::isfinite(worst) && worst <= rep.cap;
  if (cfg.refine) {
    double worst_fine = -kInf;
    run(false, worst_fine);
    apply_refinement_drift(rep, worst_fine, cfg.drift_bound);
  }
  if (experimental) {
    rep.status = CheckStatus::kNotApplicable;
    rep.note = "experimental q = 1 run; ratios recorded with no pass semantics";
    rep.pass = false;
  }
  return rep;
}

}  // namespace fofana
