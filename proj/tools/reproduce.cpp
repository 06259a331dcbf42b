#include "reproduce.hpp"

#include "superpi_fixtures.hpp"

#include "superpi/theorems.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace superpi::cli {

using nlohmann::json;

bool ReproduceReport::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"example-6-1", "example-6-2", "mkk-1"};
  return names;
}

std::string_view fixture_text(std::string_view name) {
  if (name == "example-6-1") return fixtures::example_6_1;
  if (name == "example-6-2") return fixtures::example_6_2;
  if (name == "mkk-1") return fixtures::mkk_1;
  throw std::invalid_argument("unknown example '" + std::string(name) + "'");
}

namespace {

Multidegree multidegree_of(const json& j) {
  const auto v = j.get<std::vector<int>>();
  if (v.size() != 4) throw std::invalid_argument("fixture multidegree must have 4 entries");
  return {v[0], v[1], v[2], v[3]};
}

std::map<MultiPartition, Integer> mults_of(const json& j) {
  std::map<MultiPartition, Integer> out;
  for (const auto& e : j) {
    MultiPartition mp;
    for (std::size_t i = 0; i < 4; ++i) mp.components[i] = Partition(e.at("lambda")[i].get<std::vector<int>>());
    out[mp] = Integer(e.at("m").get<long>());
  }
  return out;
}

std::string mults_string(const std::map<MultiPartition, Integer>& m) {
  if (m.empty()) return "0";
  std::string s;
  for (const auto& [lambda, mult] : m) {
    if (!s.empty()) s += " + ";
    if (mult != 1) s += mult.get_str() + "*";
    s += "chi" + lambda.to_string();
  }
  return s;
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<SuperPolynomial>& fs) {
  if (fs.empty()) return "{0}";
  std::string s = "{";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += ", ";
    s += fs[i].to_string();
  }
  return s + "}";
}

std::vector<SuperPolynomial> parse_all(const json& list, Mode mode) {
  std::vector<SuperPolynomial> out;
  for (const auto& p : list) out.push_back(parse(p.get<std::string>(), mode));
  return out;
}

struct Runner {
  const EngineOptions& opts;
  ReproduceReport report;

  void add(std::string quantity, std::string expected, std::string computed) {
    const bool ok = expected == computed;
    report.checks.push_back({std::move(quantity), std::move(expected), std::move(computed), ok});
  }

  void codim(const SuperAlgebra& a, const std::string& tag, const Multidegree& n, std::size_t expected) {
    add(tag + "c" + to_string(n), std::to_string(expected), std::to_string(codimension(a, n, opts)));
  }

  void cochar(const SuperAlgebra& a, const std::string& tag, const json& entry) {
    const Multidegree n = multidegree_of(entry.at("multidegree"));
    const auto rep = cocharacter(a, n, opts);
    if (entry.contains("codim")) add(tag + "c" + to_string(n), std::to_string(entry.at("codim").get<std::size_t>()),
                                     std::to_string(rep.codim));
    add(tag + "chi" + to_string(n), mults_string(mults_of(entry.at("mults"))), mults_string(rep.mults));
  }

  // The generators must span exactly P_<n> ∩ Id(A) at every <n> up to N.
  void generated(const SuperAlgebra& a, const std::string& tag, const json& gens_json, int max_degree) {
    const auto gens = parse_all(gens_json, a.mode());
    for (int d = 1; d <= max_degree; ++d)
      for (const auto& n : compositions_of(d)) {
        const auto span = tideal_span(gens, n, a.mode(), opts);
        const auto ids = identity_space(a, n, opts);
        const bool same = same_span(span.basis, ids, n, a.mode());
        add(tag + "generated Id in P" + to_string(n), "dim " + std::to_string(ids.size()),
            same ? "dim " + std::to_string(span.dimension()) : "span differs (dim " + std::to_string(span.dimension()) + ")");
      }
  }
};

ReproduceReport example_6_1(const json& fx, const EngineOptions& opts) {
  Runner r{opts, {}};
  const SuperAlgebra g = gallery(fx.at("algebra").get<std::string>());
  for (const auto& e : fx.at("codimensions"))
    r.codim(g, "", multidegree_of(e.at("multidegree")), e.at("codim").get<std::size_t>());
  for (const auto& n : fx.at("vanishing")) r.codim(g, "", multidegree_of(n), 0);
  for (const auto& e : fx.at("cocharacters")) r.cochar(g, "", e);
  for (const auto& e : fx.at("identities")) {
    const auto f = parse(e.at("poly").get<std::string>(), g.mode());
    r.add("identity " + f.to_string(), bool_string(e.at("holds").get<bool>()),
          bool_string(is_identity_general(f, g, opts)));
  }
  for (const auto& e : fx.at("identity_spaces")) {
    const Multidegree n = multidegree_of(e.at("multidegree"));
    const auto expected = parse_all(e.at("span"), g.mode());
    const auto computed = identity_space(g, n, opts);
    r.add("Id in P" + to_string(n), join(expected),
          same_span(expected, computed, n, g.mode()) ? join(expected) : join(computed));
  }
  r.generated(g, "", fx.at("generators"), fx.at("generated_up_to").get<int>());
  const auto& mh = fx.at("minimal_hooks");
  const HookReport hooks = hook_report(g, mh.at("max_degree").get<int>(), opts);
  for (const auto& h : mh.at("contains")) {
    const auto flat = h.get<std::vector<int>>();
    const auto found = std::find_if(hooks.minimal_hooks.begin(), hooks.minimal_hooks.end(), [&](const QuadHookSpec& q) {
      const auto f = q.flat();
      return std::equal(f.begin(), f.end(), flat.begin(), flat.end());
    });
    QuadHookSpec q;
    for (std::size_t i = 0; i < 4; ++i) q.pairs[i] = {flat[2 * i], flat[2 * i + 1]};
    r.add("minimal hook " + q.to_string(), "pareto-minimal",
          found != hooks.minimal_hooks.end() ? "pareto-minimal" : "absent");
  }
  return r.report;
}

ReproduceReport example_6_2(const json& fx, const EngineOptions& opts) {
  Runner r{opts, {}};
  const auto flat = fx.at("hook").get<std::vector<int>>();
  QuadHookSpec hook;
  for (std::size_t i = 0; i < 4; ++i) hook.pairs[i] = {flat[2 * i], flat[2 * i + 1]};
  bool first = true;
  for (const auto& name : fx.at("algebras")) {
    const std::string tag = name.get<std::string>() + " ";
    const SuperAlgebra e = gallery(name.get<std::string>());
    bool inside = true;
    for (const auto& entry : fx.at("cocharacters")) {
      r.cochar(e, tag, entry);
      for (const auto& [lambda, m] : cocharacter(e, multidegree_of(entry.at("multidegree")), opts).mults)
        inside = inside && quad_hook_contains(hook, lambda);
    }
    r.add(tag + "cocharacters inside " + hook.to_string(), "true", bool_string(inside));
    if (first) r.generated(e, tag, fx.at("generators"), fx.at("generated_up_to").get<int>());
    first = false;
  }
  return r.report;
}

ReproduceReport mkk_1(const json& fx, const EngineOptions& opts) {
  Runner r{opts, {}};
  const SuperAlgebra m = gallery(fx.at("algebra").get<std::string>());
  const auto dims = fx.at("component_dims").get<std::vector<int>>();
  r.add("component dimensions", to_string(Multidegree{dims.at(0), dims.at(1), dims.at(2), dims.at(3)}),
        to_string(component_bases(m).dims()));
  for (const auto& e : fx.at("standard")) {
    const std::string type = e.at("type").get<std::string>();
    const auto it = std::find_if(kAllVarTypes.begin(), kAllVarTypes.end(), [&](VarType t) { return token(t) == type; });
    if (it == kAllVarTypes.end()) throw std::invalid_argument("unknown variable type '" + type + "' in fixture");
    const int k = e.at("k").get<int>();
    const int p = e.at("m").get<int>();
    const auto f = poly_power(standard_poly(k, *it, m.mode()), p);
    std::string label = "St_" + std::to_string(k) + "(" + type + ")";
    if (p != 1) label += "^" + std::to_string(p);
    r.add("identity " + label, bool_string(e.at("holds").get<bool>()), bool_string(is_identity_general(f, m, opts)));
  }
  return r.report;
}

} // namespace

ReproduceReport reproduce(std::string_view name, const EngineOptions& opts) {
  const json fx = json::parse(fixture_text(name));
  ReproduceReport rep;
  if (name == "example-6-1") rep = example_6_1(fx, opts);
  else if (name == "example-6-2") rep = example_6_2(fx, opts);
  else rep = mkk_1(fx, opts);
  rep.name = std::string(name);
  return rep;
}

} // namespace superpi::cli
