#include "fofana/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace fofana {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& context, const std::string& message) {
  throw std::invalid_argument(context + ": " + message);
}

const json& field(const json& j, const char* name, const char* context) {
  if (!j.is_object()) fail(context, "expected an object");
  const auto it = j.find(name);
  if (it == j.end()) fail(context, std::string("missing field '") + name + "'");
  return *it;
}

double number_field(const json& j, const char* name, const char* context) {
  const json& v = field(j, name, context);
  if (!v.is_number()) fail(context, std::string("field '") + name + "' must be a number");
  return v.get<double>();
}

std::string kind_field(const json& j, const char* context) {
  const json& v = field(j, "kind", context);
  if (!v.is_string()) fail(context, "field 'kind' must be a string");
  return v.get<std::string>();
}

std::vector<double> number_array(const json& j, const char* name, const char* context) {
  const json& v = field(j, name, context);
  if (!v.is_array()) fail(context, std::string("field '") + name + "' must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const json& x : v) {
    if (!x.is_number()) fail(context, std::string("field '") + name + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

json lattice_to_json(const Lattice& lattice) {
  return json{{"d", lattice.dim()}, {"h", lattice.spacing()}, {"L", lattice.half_width()}};
}

Lattice lattice_from_json(const json& j) {
  const char* ctx = "lattice";
  const json& d = field(j, "d", ctx);
  if (!d.is_number_integer()) fail(ctx, "field 'd' must be an integer");
  return Lattice::make(d.get<int>(), number_field(j, "h", ctx), number_field(j, "L", ctx));
}

json spec_to_json(const FunctionSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ConstantSpec>) {
          return json{{"kind", "constant"}, {"value", s.value}};
        } else if constexpr (std::is_same_v<T, IndicatorBallSpec>) {
          return json{{"kind", "indicator-ball"},
                      {"center", {s.center[0], s.center[1]}},
                      {"radius", s.radius}};
        } else if constexpr (std::is_same_v<T, GaussianSpec>) {
          return json{{"kind", "gaussian"}, {"sigma", s.sigma}};
        } else if constexpr (std::is_same_v<T, PowerTailSpec>) {
          return json{{"kind", "power-tail"}, {"alpha", s.alpha}, {"eps", s.eps}};
        } else {
          json out{{"kind", "step-random"}, {"seed", s.seed}, {"block_cells", s.block_cells}};
          if (s.block_len) out["block_len"] = *s.block_len;
          return out;
        }
      },
      spec);
}

FunctionSpec spec_from_json(const json& j) {
  const char* ctx = "function";
  const std::string kind = kind_field(j, ctx);
  if (kind == "constant") {
    return ConstantSpec{number_field(j, "value", ctx)};
  }
  if (kind == "indicator-ball") {
    const std::vector<double> c = number_array(j, "center", ctx);
    if (c.empty() || c.size() > 2) fail(ctx, "field 'center' must have 1 or 2 entries");
    IndicatorBallSpec s;
    s.center = {c[0], c.size() == 2 ? c[1] : 0.0};
    s.radius = number_field(j, "radius", ctx);
    return s;
  }
  if (kind == "gaussian") {
    return GaussianSpec{number_field(j, "sigma", ctx)};
  }
  if (kind == "power-tail") {
    return PowerTailSpec{number_field(j, "alpha", ctx), number_field(j, "eps", ctx)};
  }
  if (kind == "step-random") {
    StepRandomSpec s;
    const json& seed = field(j, "seed", ctx);
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
      fail(ctx, "field 'seed' must be an integer");
    }
    s.seed = seed.get<std::uint64_t>();
    const json& bc = field(j, "block_cells", ctx);
    if (!bc.is_number_integer()) fail(ctx, "field 'block_cells' must be an integer");
    s.block_cells = bc.get<int>();
    if (j.contains("block_len")) s.block_len = number_field(j, "block_len", ctx);
    return s;
  }
  fail(ctx, "unknown kind '" + kind + "'");
}

json weight_to_json(const WeightFunction& w) {
  switch (w.kind()) {
    case WeightFunction::Kind::kPower:
      return json{{"kind", "power"}, {"alpha", w.alpha()}};
    case WeightFunction::Kind::kPowerLog:
      return json{{"kind", "power-log"}, {"alpha", w.alpha()}, {"beta", w.beta()}};
    case WeightFunction::Kind::kTabulated:
      return json{{"kind", "tabulated"}, {"knots", w.knots()}, {"values", w.values()}};
  }
  return json{};
}

WeightFunction weight_from_json(const json& j, int dim) {
  const char* ctx = "phi";
  const std::string kind = kind_field(j, ctx);
  if (kind == "power") {
    return WeightFunction::power(dim, number_field(j, "alpha", ctx));
  }
  if (kind == "power-log") {
    return WeightFunction::power_log(dim, number_field(j, "alpha", ctx),
                                     number_field(j, "beta", ctx));
  }
  if (kind == "tabulated") {
    return WeightFunction::tabulated(dim, number_array(j, "knots", ctx),
                                     number_array(j, "values", ctx));
  }
  fail(ctx, "unknown kind '" + kind + "'");
}

WeightFunction weight_from_text(const std::string& text, int dim) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("phi: not valid JSON (") + e.what() + ")");
  }
  return weight_from_json(j, dim);
}

GridFunction grid_function_from_json(const json& j) {
  const char* ctx = "input";
  const Lattice lattice = lattice_from_json(field(j, "lattice", ctx));
  const bool has_fn = j.contains("function");
  const bool has_values = j.contains("values");
  if (has_fn == has_values) {
    fail(ctx, "provide exactly one of 'function' or 'values'");
  }
  if (has_fn) {
    return sample(spec_from_json(j.at("function")), lattice);
  }
  std::vector<double> values = number_array(j, "values", ctx);
  if (values.size() != lattice.cell_count()) {
    fail(ctx, "field 'values' has " + std::to_string(values.size()) + " entries, lattice needs " +
                  std::to_string(lattice.cell_count()));
  }
  return GridFunction(lattice, std::move(values));
}

json grid_function_to_json(const GridFunction& f) {
  return json{{"lattice", lattice_to_json(f.lattice())}, {"values", f.values()}};
}

json corpus_to_json(const Corpus& corpus) {
  json members = json::array();
  for (const CorpusMember& m : corpus.members) {
    members.push_back(json{{"id", m.id},
                           {"lattice", lattice_to_json(m.lattice)},
                           {"function", spec_to_json(m.spec)},
                           {"description", describe(m.spec)}});
  }
  return json{{"seed", corpus.seed}, {"profile", to_string(corpus.profile)},
              {"members", std::move(members)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path.string() + "' is not valid JSON (" + e.what() + ")");
  }
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << text;
    if (!out.good()) throw std::runtime_error("short write to '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

void write_json_atomic(const std::filesystem::path& path, const json& j) {
  write_text_atomic(path, j.dump(2) + "\n");
}

}  // namespace fofana
