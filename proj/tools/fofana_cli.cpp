#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fofana/corpus.hpp"
#include "fofana/json_io.hpp"
#include "fofana/maximal.hpp"
#include "fofana/norms.hpp"
#include "fofana/parallel.hpp"
#include "fofana/verify.hpp"
#include "fofana/version.hpp"
#include "fofana/weights.hpp"

namespace {

using nlohmann::json;
using namespace fofana;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

struct GlobalOpts {
  int threads = 0;
  std::string out_dir;
};

std::filesystem::path resolve_out(const GlobalOpts& g, const std::string& p) {
  std::filesystem::path fp(p);
  if (fp.is_absolute() || g.out_dir.empty()) return fp;
  return std::filesystem::path(g.out_dir) / fp;
}

RadiusGrid make_radii(const std::string& spec, const Lattice& lattice) {
  if (spec.empty()) return RadiusGrid::default_for(lattice);
  if (spec == "all-aligned") return RadiusGrid::all_aligned(lattice);
  return RadiusGrid::parse(spec);
}

std::vector<double> parse_number_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": '" + item + "' is not a number");
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

std::vector<Ball> parse_balls(const std::string& text) {
  std::vector<Ball> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const std::vector<double> nums = parse_number_list(item, "balls");
    Ball b;
    if (nums.size() == 2) {
      b.center = {nums[0], 0.0};
      b.radius = nums[1];
    } else if (nums.size() == 3) {
      b.center = {nums[0], nums[1]};
      b.radius = nums[2];
    } else {
      throw std::invalid_argument("balls: each entry is 'cx,r' or 'cx,cy,r'");
    }
    if (!(b.radius > 0)) throw std::invalid_argument("balls: radius must be positive");
    out.push_back(b);
  }
  if (out.empty()) throw std::invalid_argument("balls: empty list");
  return out;
}

json base_config(const GlobalOpts& g, const char* subcommand) {
  json j;
  j["subcommand"] = subcommand;
  j["threads"] = g.threads;
  j["version"] = kVersion;
  j["tool"] = kToolName;
  return j;
}

// ---------------------------------------------------------------- norm ----

struct NormOpts {
  std::string request;
  std::string input;
  std::string kind = "gen-fofana";
  std::string q = "1";
  std::string p = "inf";
  double alpha = 2.0;
  std::string phi;
  double r = 0.0;
  std::string radii;
  std::string variant = "continuous";
  std::string out;
};

int run_norm(const GlobalOpts& g, NormOpts o, const std::vector<bool>& flag_given) {
  json input_json;
  if (!o.request.empty()) {
    const json req = read_json_file(o.request);
    // Flags given on the command line win over request fields.
    const auto take = [&](const char* name, std::string& slot, std::size_t idx) {
      if (!flag_given[idx] && req.contains(name)) slot = req.at(name).is_string()
                                                             ? req.at(name).get<std::string>()
                                                             : req.at(name).dump();
    };
    take("norm", o.kind, 0);
    take("q", o.q, 1);
    take("p", o.p, 2);
    take("radii", o.radii, 3);
    take("variant", o.variant, 4);
    if (!flag_given[5] && req.contains("alpha")) o.alpha = req.at("alpha").get<double>();
    if (!flag_given[6] && req.contains("phi")) o.phi = req.at("phi").dump();
    if (!flag_given[7] && req.contains("r")) o.r = req.at("r").get<double>();
    if (req.contains("input")) {
      if (req.at("input").is_string()) {
        if (o.input.empty()) o.input = req.at("input").get<std::string>();
      } else {
        input_json = req.at("input");
      }
    }
  }
  if (input_json.is_null()) {
    if (o.input.empty()) throw std::invalid_argument("norm: --input is required");
    input_json = read_json_file(o.input);
  }
  const GridFunction f = grid_function_from_json(input_json);
  const Lattice& lat = f.lattice();
  const Exponent q = Exponent::parse(o.q);
  const Exponent p = Exponent::parse(o.p);

  json out;
  out["config"] = base_config(g, "norm");
  out["config"]["kind"] = o.kind;
  out["config"]["q"] = q.str();
  out["config"]["input"] = o.input.empty() ? "<inline>" : o.input;
  out["config"]["lattice"] = lattice_to_json(lat);

  double value = 0.0;
  std::optional<NormValue> nv;
  if (o.kind == "lebesgue") {
    value = lebesgue_norm(f, q);
  } else if (o.kind == "amalgam-cont" || o.kind == "amalgam-disc") {
    if (!(o.r > 0)) throw std::invalid_argument("norm: --r must be positive for amalgam kinds");
    const ExponentPair qp(q, p);
    value = o.kind == "amalgam-cont" ? amalgam_continuous(f, o.r, qp)
                                     : amalgam_discrete(f, o.r, qp);
    out["config"]["p"] = p.str();
    out["config"]["r"] = o.r;
  } else if (o.kind == "fofana" || o.kind == "gen-fofana" || o.kind == "morrey") {
    const RadiusGrid radii = make_radii(o.radii, lat);
    out["config"]["p"] = p.str();
    out["config"]["radii"] = radii.spec();
    if (o.kind == "fofana") {
      nv = fofana_norm(f, ExponentPair(q, p), o.alpha, radii);
      out["config"]["alpha"] = o.alpha;
    } else if (o.kind == "morrey") {
      const std::string phi = o.phi.empty() ? R"({"kind":"power","alpha":2})" : o.phi;
      const WeightFunction w = weight_from_text(phi, lat.dim());
      nv = morrey_norm(f, q, w, radii);
      out["config"]["phi"] = weight_to_json(w);
    } else {
      const std::string phi = o.phi.empty() ? R"({"kind":"power","alpha":2})" : o.phi;
      const WeightFunction w = weight_from_text(phi, lat.dim());
      const AmalgamVariant variant = o.variant == "discrete" ? AmalgamVariant::kDiscrete
                                                             : AmalgamVariant::kContinuous;
      if (o.variant != "discrete" && o.variant != "continuous") {
        throw std::invalid_argument("norm: --variant must be continuous or discrete");
      }
      nv = generalized_fofana_norm(f, ExponentPair(q, p), w, radii, variant);
      out["config"]["phi"] = weight_to_json(w);
      out["config"]["variant"] = o.variant;
    }
    value = nv->value;
  } else {
    throw std::invalid_argument("norm: unknown kind '" + o.kind + "'");
  }

  std::printf("%.17g\n", value);
  if (!o.out.empty()) {
    out["value"] = value;
    if (nv) {
      out["argmax_r"] = nv->argmax_r;
      json trace = json::array();
      for (const auto& [tr, tv] : nv->trace) trace.push_back(json::array({tr, tv}));
      out["trace"] = std::move(trace);
    } else {
      out["argmax_r"] = nullptr;
      out["trace"] = json::array();
    }
    write_json_atomic(resolve_out(g, o.out), out);
  }
  return kExitOk;
}

// ------------------------------------------------------------- maximal ----

struct MaximalOpts {
  std::string input;
  std::string method = "naive";
  std::string radii = "all-aligned";
  std::string out;
};

int run_maximal(const GlobalOpts& g, const MaximalOpts& o) {
  const GridFunction f = grid_function_from_json(read_json_file(o.input));
  const Lattice& lat = f.lattice();
  MaximalConfig::Method method;
  if (o.method == "naive") {
    method = MaximalConfig::Method::kNaive;
  } else if (o.method == "prefix-cube") {
    method = MaximalConfig::Method::kPrefixCube;
  } else {
    throw std::invalid_argument("maximal: --method must be naive or prefix-cube");
  }
  const RadiusGrid radii = make_radii(o.radii, lat);
  const MaximalConfig cfg = MaximalConfig::make(lat, radii, method);
  const GridFunction mf = maximal_function(f, cfg);

  double peak = 0.0;
  for (double v : mf.values()) peak = std::max(peak, v);
  std::printf("%.17g\n", peak);

  if (!o.out.empty()) {
    json out = grid_function_to_json(mf);
    out["config"] = base_config(g, "maximal");
    out["config"]["input"] = o.input;
    out["config"]["method"] = o.method;
    out["config"]["radii"] = radii.spec();
    out["config"]["radii_used"] = cfg.radii;
    write_json_atomic(resolve_out(g, o.out), out);
  }
  return kExitOk;
}

// ------------------------------------------------------------ check-phi ----

struct CheckPhiOpts {
  std::string phi;
  std::string q = "2";
  std::string p = "4";
  int d = 1;
  std::string t_grid = "geometric:0.01:100:64";
  std::string r_probes = "geometric:0.25:4:4";
  double t_max = 0.0;
  double lemma_r = 1.0;
  int i_max = 8;
  bool allow_q1 = false;
  std::string report;
};

int run_check_phi(const GlobalOpts& g, const CheckPhiOpts& o) {
  const WeightFunction w = weight_from_text(o.phi, o.d);
  const Exponent q = Exponent::parse(o.q);
  const Exponent p = Exponent::parse(o.p);
  const RadiusGrid t_grid = RadiusGrid::parse(o.t_grid);
  const RadiusGrid probes = RadiusGrid::parse(o.r_probes);
  const double t_max = o.t_max > 0 ? o.t_max : 256.0 * probes.radii().back();

  const ClassCheckResult cls = check_class(w, q, p, t_grid);
  const double doubling = check_doubling(w, t_grid);
  const NakaiResult nakai = nakai_constant(w, q, p, o.d, probes, t_max, o.allow_q1);
  const CheckReport lemma = lemma_dyadic_lower_bound(w, q, p, o.d, o.lemma_r, o.i_max);

  std::printf("class:    C_dec=%.6g C_inc=%.6g %s\n", cls.c_dec, cls.c_inc,
              cls.pass ? "pass" : "FAIL");
  std::printf("doubling: C=%.17g\n", doubling);
  if (nakai.divergent) {
    std::printf("nakai:    divergent\n");
  } else {
    std::printf("nakai:    C_hat=%.17g\n", *nakai.c_hat);
  }
  std::printf("%s\n", lemma.summary_line().c_str());

  if (!o.report.empty()) {
    json rep;
    rep["config"] = base_config(g, "check-phi");
    rep["config"]["phi"] = weight_to_json(w);
    rep["config"]["q"] = q.str();
    rep["config"]["p"] = p.str();
    rep["config"]["d"] = o.d;
    rep["config"]["t_grid"] = t_grid.spec();
    rep["config"]["r_probes"] = probes.spec();
    rep["config"]["t_max"] = t_max;
    rep["class"] = {{"c_dec", cls.c_dec},
                    {"c_inc", cls.c_inc},
                    {"cap", cls.cap},
                    {"pass", cls.pass},
                    {"witness_dec", {cls.witness_dec.first, cls.witness_dec.second}},
                    {"witness_inc", {cls.witness_inc.first, cls.witness_inc.second}}};
    rep["doubling"] = doubling;
    json nj;
    nj["divergent"] = nakai.divergent;
    if (nakai.c_hat) nj["c_hat"] = *nakai.c_hat;
    json rows = json::array();
    for (const NakaiRow& row : nakai.rows) {
      rows.push_back({{"r", row.r},
                      {"integral", std::isfinite(row.integral) ? json(row.integral) : json("inf")},
                      {"bound", row.bound},
                      {"ratio", std::isfinite(row.ratio) ? json(row.ratio) : json("inf")}});
    }
    nj["rows"] = std::move(rows);
    rep["nakai"] = std::move(nj);
    rep["lemma"] = lemma.to_json();
    write_json_atomic(resolve_out(g, o.report), rep);
  }
  return cls.pass && lemma.pass ? kExitOk : kExitCheckFailed;
}

// -------------------------------------------------------------- verify ----

struct VerifyOpts {
  std::string suite = "all";
  std::string phi = R"({"kind":"power","alpha":2})";
  std::string q = "2";
  std::string p = "4";
  std::string q1, q2, p1, p2;
  int d = 1;
  double h = 1.0 / 64.0;
  double L = 2.0;
  std::uint64_t seed = 1;
  std::string profile = "standard";
  std::string radii;
  std::string r0_list = "0.25,0.5,1,2";
  std::string balls;
  std::string report;
  std::string csv;
  double cap_embeddings = 100.0;
  double cap_indicator = 16.0;
  double cap_boundedness = 100.0;
  double drift_bound = 0.10;
  double row_drift_bound = 0.05;
  bool no_refine = false;
  bool experimental_q1 = false;
  std::string method = "naive";
};

int run_verify(const GlobalOpts& g, const VerifyOpts& o) {
  const Lattice lattice = Lattice::make(o.d, o.h, o.L);
  const WeightFunction w = weight_from_text(o.phi, o.d);
  const Exponent q = Exponent::parse(o.q);
  const Exponent p = Exponent::parse(o.p);
  const ExponentPair qp(q, p);
  const Profile profile = parse_profile(o.profile);
  const RadiusGrid radii = make_radii(o.radii, lattice);

  VerifyConfig cfg;
  cfg.cap_embeddings = o.cap_embeddings;
  cfg.cap_indicator = o.cap_indicator;
  cfg.cap_boundedness = o.cap_boundedness;
  cfg.drift_bound = o.drift_bound;
  cfg.row_drift_bound = o.row_drift_bound;
  cfg.refine = !o.no_refine && profile != Profile::kSmoke;
  cfg.experimental_q1 = o.experimental_q1;
  if (o.method == "prefix-cube") {
    cfg.method = MaximalConfig::Method::kPrefixCube;
  } else if (o.method != "naive") {
    throw std::invalid_argument("verify: --method must be naive or prefix-cube");
  }

  std::vector<double> alphas;
  if (w.kind() != WeightFunction::Kind::kTabulated) alphas.push_back(w.alpha());
  const Corpus corpus = generate_corpus(o.seed, lattice, profile, alphas);

  // Embedding exponents: defaults pick interior points of [q, p].
  const Exponent q1 = o.q1.empty() ? q : Exponent::parse(o.q1);
  Exponent q2 = q1;
  if (!o.q2.empty()) {
    q2 = Exponent::parse(o.q2);
  } else if (p.is_infinite()) {
    q2 = Exponent::of(2.0 * q1.value());
  } else {
    q2 = Exponent::of(std::min(2.0 * q1.value(), p.value()));
  }
  Exponent p2 = o.p2.empty() ? p : Exponent::parse(o.p2);
  Exponent p1 = p2;
  if (!o.p1.empty()) {
    p1 = Exponent::parse(o.p1);
  } else if (p2.is_infinite()) {
    p1 = Exponent::of(std::max(q1.value(), 2.0 * q2.value()));
  } else {
    p1 = Exponent::of(std::max(q1.value(), p2.value() / 2.0));
  }

  const std::vector<double> r0s = parse_number_list(o.r0_list, "r0-list");
  const std::vector<Ball> balls =
      o.balls.empty()
          ? std::vector<Ball>{{{0.0, 0.0}, o.L / 4.0}, {{0.0, 0.0}, o.L / 2.0},
                              {{o.L / 4.0, 0.0}, o.L / 4.0}}
          : parse_balls(o.balls);

  const bool all = o.suite == "all";
  std::vector<std::pair<std::string, CheckReport>> results;
  std::vector<std::string> skipped_suites;

  if (all || o.suite == "amalgam") {
    results.emplace_back("amalgam", check_norm_equivalence(corpus, qp, radii, cfg));
  }
  if (all || o.suite == "embeddings") {
    results.emplace_back("embeddings",
                         check_embeddings(corpus, q1, q2, p1, p2, w, radii, cfg));
  }
  if (all || o.suite == "indicator") {
    results.emplace_back("indicator",
                         check_ball_indicator(w, qp, r0s, radii, lattice, cfg));
  }
  if (all || o.suite == "fefferman-stein") {
    if (!q.is_infinite() && q.value() > 1.0) {
      results.emplace_back("fefferman-stein",
                           check_fefferman_stein(corpus, q, balls, radii, cfg));
    } else if (all) {
      skipped_suites.push_back("fefferman-stein (requires q > 1)");
    } else {
      throw std::invalid_argument("verify: suite fefferman-stein requires finite q > 1");
    }
  }
  if (all || o.suite == "maximal") {
    results.emplace_back("maximal", check_maximal_boundedness(corpus, qp, w, radii, cfg));
  }
  if (results.empty() && skipped_suites.empty()) {
    throw std::invalid_argument("verify: unknown suite '" + o.suite + "'");
  }

  for (const auto& [name, rep] : results) {
    (void)name;
    std::printf("%s\n", rep.summary_line().c_str());
  }
  for (const std::string& s : skipped_suites) std::printf("%-18s skipped\n", s.c_str());

  json config = base_config(g, "verify");
  config["suite"] = o.suite;
  config["phi"] = weight_to_json(w);
  config["q"] = q.str();
  config["p"] = p.str();
  config["q1"] = q1.str();
  config["q2"] = q2.str();
  config["p1"] = p1.str();
  config["p2"] = p2.str();
  config["lattice"] = lattice_to_json(lattice);
  config["seed"] = o.seed;
  config["profile"] = to_string(profile);
  config["radii"] = radii.spec();
  config["r0_list"] = r0s;
  {
    json bj = json::array();
    for (const Ball& b : balls) bj.push_back({{"center", {b.center[0], b.center[1]}},
                                              {"radius", b.radius}});
    config["balls"] = std::move(bj);
  }
  config["caps"] = {{"embeddings", cfg.cap_embeddings},
                    {"indicator", cfg.cap_indicator},
                    {"boundedness", cfg.cap_boundedness}};
  config["drift_bound"] = cfg.drift_bound;
  config["row_drift_bound"] = cfg.row_drift_bound;
  config["refine"] = cfg.refine;
  config["experimental_q1"] = cfg.experimental_q1;
  config["method"] = o.method;

  if (!o.report.empty()) {
    json rep;
    rep["config"] = config;
    json suites;
    for (const auto& [name, r] : results) suites[name] = r.to_json();
    rep["suites"] = std::move(suites);
    write_json_atomic(resolve_out(g, o.report), rep);
  }
  if (!o.csv.empty()) {
    std::ostringstream os;
    write_csv_header(os);
    for (const auto& [name, r] : results) r.append_csv(os, name);
    write_text_atomic(resolve_out(g, o.csv), os.str());
  }

  for (const auto& [name, rep] : results) {
    (void)name;
    if (rep.status == CheckStatus::kOk && !rep.pass) return kExitCheckFailed;
  }
  return kExitOk;
}

// -------------------------------------------------------------- corpus ----

struct CorpusOpts {
  std::uint64_t seed = 1;
  std::string profile = "standard";
  int d = 1;
  double h = 1.0 / 64.0;
  double L = 2.0;
  std::string alphas = "2";
  std::string out;
};

int run_corpus(const GlobalOpts& g, const CorpusOpts& o) {
  const Lattice lattice = Lattice::make(o.d, o.h, o.L);
  const Corpus corpus = generate_corpus(o.seed, lattice, parse_profile(o.profile),
                                        parse_number_list(o.alphas, "alphas"));
  json out = corpus_to_json(corpus);
  out["config"] = base_config(g, "corpus");
  out["config"]["lattice"] = lattice_to_json(lattice);
  if (o.out.empty()) {
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    write_json_atomic(resolve_out(g, o.out), out);
    std::printf("wrote %s (%zu members)\n", o.out.c_str(), corpus.members.size());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolName) +
               ": amalgam-scale norms, maximal operators, and inequality checks on lattices"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);

  GlobalOpts g;
  app.add_option("--threads", g.threads, "worker thread count (0 = library default)")
      ->envname("FOFANA_KIT_THREADS");
  app.add_option("--out-dir", g.out_dir, "directory prefix for relative output paths");

  NormOpts n;
  std::vector<bool> norm_flag_given(8, false);
  CLI::App* norm = app.add_subcommand("norm", "evaluate a norm of a sampled function");
  auto* fk = norm->add_option("--kind", n.kind,
                              "lebesgue|amalgam-cont|amalgam-disc|fofana|gen-fofana|morrey");
  auto* fq = norm->add_option("--q", n.q, "inner exponent (number or 'inf')");
  auto* fp = norm->add_option("--p", n.p, "outer exponent (number or 'inf')");
  auto* fr = norm->add_option("--radii", n.radii, "radius grid spec or 'all-aligned'");
  auto* fv = norm->add_option("--variant", n.variant, "continuous|discrete");
  auto* fa = norm->add_option("--alpha", n.alpha, "Fofana exponent");
  auto* fphi = norm->add_option("--phi", n.phi, "weight JSON");
  auto* frr = norm->add_option("--r", n.r, "single radius for amalgam kinds");
  norm->add_option("--input", n.input, "function JSON file");
  norm->add_option("--request", n.request, "request JSON file (flags override)");
  norm->add_option("--out", n.out, "write the value/trace report here");

  MaximalOpts m;
  CLI::App* maximal = app.add_subcommand("maximal", "apply the discrete maximal operator");
  maximal->add_option("--input", m.input, "function JSON file")->required();
  maximal->add_option("--method", m.method, "naive|prefix-cube");
  maximal->add_option("--radii", m.radii, "radius grid spec or 'all-aligned'");
  maximal->add_option("--out", m.out, "write the result grid here");

  CheckPhiOpts c;
  CLI::App* check_phi = app.add_subcommand("check-phi", "weight-class and tail diagnostics");
  check_phi->add_option("--phi", c.phi, "weight JSON")->required();
  check_phi->add_option("--q", c.q, "inner exponent");
  check_phi->add_option("--p", c.p, "outer exponent");
  check_phi->add_option("--d", c.d, "dimension (1 or 2)");
  check_phi->add_option("--t-grid", c.t_grid, "scale grid spec");
  check_phi->add_option("--r-probes", c.r_probes, "tail probe radii spec");
  check_phi->add_option("--t-max", c.t_max, "quadrature horizon (0 = auto)");
  check_phi->add_option("--lemma-r", c.lemma_r, "base radius of the dyadic lower bound");
  check_phi->add_option("--i-max", c.i_max, "number of dyadic rows");
  check_phi->add_flag("--allow-q1", c.allow_q1, "permit q = 1 (experimental)");
  check_phi->add_option("--report", c.report, "write the JSON report here");

  VerifyOpts v;
  CLI::App* verify = app.add_subcommand("verify", "run the inequality verification suites");
  verify->add_option("--suite", v.suite,
                     "all|amalgam|embeddings|indicator|fefferman-stein|maximal");
  verify->add_option("--phi", v.phi, "weight JSON");
  verify->add_option("--q", v.q, "inner exponent");
  verify->add_option("--p", v.p, "outer exponent");
  verify->add_option("--q1", v.q1, "embedding exponent override");
  verify->add_option("--q2", v.q2, "embedding exponent override");
  verify->add_option("--p1", v.p1, "embedding exponent override");
  verify->add_option("--p2", v.p2, "embedding exponent override");
  verify->add_option("--d", v.d, "dimension (1 or 2)");
  verify->add_option("--spacing", v.h, "lattice spacing h");
  verify->add_option("--half-width,--L", v.L, "lattice half-width L");
  verify->add_option("--seed", v.seed, "corpus seed");
  verify->add_option("--profile", v.profile, "smoke|standard|refinement");
  verify->add_option("--radii", v.radii, "radius grid spec or 'all-aligned'");
  verify->add_option("--r0-list", v.r0_list, "ball radii for the indicator suite");
  verify->add_option("--balls", v.balls, "'cx,r' or 'cx,cy,r', ';'-separated");
  verify->add_option("--report", v.report, "write the JSON report here");
  verify->add_option("--csv", v.csv, "write row data here");
  verify->add_option("--cap-embeddings", v.cap_embeddings, "C_emp cap");
  verify->add_option("--cap-indicator", v.cap_indicator, "spread cap");
  verify->add_option("--cap-boundedness", v.cap_boundedness, "C_emp cap");
  verify->add_option("--drift-bound", v.drift_bound, "relative drift bound under h -> h/2");
  verify->add_option("--row-drift-bound", v.row_drift_bound, "per-row drift bound");
  verify->add_flag("--no-refine", v.no_refine, "skip the h/2 resampling passes");
  verify->add_flag("--experimental-q1", v.experimental_q1,
                   "allow q = 1 (reported, no pass semantics)");
  verify->add_option("--method", v.method, "maximal method: naive|prefix-cube");

  CorpusOpts co;
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "emit the deterministic input corpus");
  corpus_cmd->add_option("--seed", co.seed, "corpus seed");
  corpus_cmd->add_option("--profile", co.profile, "smoke|standard|refinement");
  corpus_cmd->add_option("--d", co.d, "dimension (1 or 2)");
  corpus_cmd->add_option("--spacing", co.h, "lattice spacing h");
  corpus_cmd->add_option("--half-width,--L", co.L, "lattice half-width L");
  corpus_cmd->add_option("--alphas", co.alphas, "power-tail exponents, comma-separated");
  corpus_cmd->add_option("--out", co.out, "write the corpus JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (g.threads < 0) throw std::invalid_argument("--threads must be >= 0");
    par::set_threads(g.threads);
    if (norm->parsed()) {
      norm_flag_given = {fk->count() > 0,  fq->count() > 0,  fp->count() > 0,
                         fr->count() > 0,  fv->count() > 0,  fa->count() > 0,
                         fphi->count() > 0, frr->count() > 0};
      return run_norm(g, n, norm_flag_given);
    }
    if (maximal->parsed()) return run_maximal(g, m);
    if (check_phi->parsed()) return run_check_phi(g, c);
    if (verify->parsed()) return run_verify(g, v);
    if (corpus_cmd->parsed()) return run_corpus(g, co);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
