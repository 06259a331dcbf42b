#include "cli.hpp"

#include "reproduce.hpp"

#include "superpi/algebras.hpp"
#include "superpi/engine.hpp"
#include "superpi/errors.hpp"
#include "superpi/serialize.hpp"
#include "superpi/theorems.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace superpi::cli {

namespace {

using nlohmann::ordered_json;

struct Globals {
  std::string algebra = "grassmann2";
  std::string algebra_file;
  std::string format = "table";
  unsigned jobs = 1;
  double budget = 0;
  int max_degree = 5;

  bool json() const { return format == "json"; }
  std::string label() const { return algebra_file.empty() ? algebra : algebra_file; }

  SuperAlgebra load() const { return algebra_file.empty() ? gallery(algebra) : load_algebra_file(algebra_file); }

  EngineOptions options() const {
    EngineOptions o = EngineOptions::from_env();
    if (budget > 0) o.max_entries = budget;
    o.max_degree = max_degree;
    o.jobs = std::max(1u, jobs);
    return o;
  }
};

// Column-aligned plain-text table. Widths count code points so "∅" lines up.
class Table {
public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], display_width(r[i]));
      }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - display_width(r[i]) + 2, ' ');
      }
      out << line << "\n";
    }
  }

private:
  static std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
  }

  std::vector<std::vector<std::string>> rows_;
};

ordered_json header() {
  ordered_json j;
  j["schema"] = kSchema;
  return j;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

Multidegree parse_multidegree(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int x = -1;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || x < 0) throw std::invalid_argument("bad multidegree entry '" + item + "'");
    v.push_back(x);
  }
  if (v.size() != 4) throw std::invalid_argument("multidegree needs four entries n1,n2,n3,n4");
  return {v[0], v[1], v[2], v[3]};
}

std::array<std::pair<int, int>, 4> parse_pairs(const std::string& text) {
  std::array<std::pair<int, int>, 4> out{};
  std::stringstream ss(text);
  std::string item;
  std::size_t count = 0;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos || count >= 4) throw std::invalid_argument("expected four pairs a:b separated by ','");
    try {
      std::size_t u1 = 0, u2 = 0;
      const std::string a = item.substr(0, colon), b = item.substr(colon + 1);
      const int x = std::stoi(a, &u1);
      const int y = std::stoi(b, &u2);
      if (u1 != a.size() || u2 != b.size() || x < 0 || y < 0) throw std::invalid_argument("");
      out[count++] = {x, y};
    } catch (const std::exception&) {
      throw std::invalid_argument("bad pair '" + item + "'");
    }
  }
  if (count != 4) throw std::invalid_argument("expected four pairs a:b separated by ','");
  return out;
}

QuadHookSpec to_hook(const std::array<std::pair<int, int>, 4>& p) {
  QuadHookSpec h;
  for (std::size_t i = 0; i < 4; ++i) h.pairs[i] = {p[i].first, p[i].second};
  return h;
}

// A readable file is read line by line (lines starting with '#' are
// comments, since '^#' belongs to the grammar); anything
// else is taken as a single polynomial.
std::vector<std::string> polynomial_sources(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) {
    // the polynomial grammar has no '.', and '/' only inside coefficients
    const bool looks_like_path = arg.find('.') != std::string::npos ||
                                 (arg.find('/') != std::string::npos && arg.find_first_of("*+-()") == std::string::npos);
    if (looks_like_path) throw std::runtime_error("file not found: " + arg);
    return {arg};
  }
  std::ifstream in(arg);
  if (!in) throw std::runtime_error("cannot read " + arg);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::string format_element(const SuperAlgebra& a, const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const bool neg = v[i] < 0;
    const Rational mag = neg ? Rational(-v[i]) : v[i];
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    if (mag != 1) s += to_string(mag) + "*";
    s += a.basis_names()[i];
  }
  return s.empty() ? "0" : s;
}

std::string frame_string(const std::vector<FrameSlot>& frame) {
  std::string s = "[";
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (i) s += " ";
    s += frame[i] ? std::string(token(*frame[i])) : "1";
  }
  return s + "]";
}

ordered_json frame_json(const std::vector<FrameSlot>& frame) {
  ordered_json j = ordered_json::array();
  for (const auto& s : frame) j.push_back(s ? std::string(token(*s)) : "1");
  return j;
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

// ---- subcommands ---------------------------------------------------------

int cmd_validate(const Globals& g, std::ostream& out) {
  const SuperAlgebra a = g.load();
  const ValidationReport rep = validate(a);
  std::optional<Multidegree> dims;
  if (rep.ok()) dims = component_bases(a).dims();
  if (g.json()) {
    auto j = header();
    j["algebra"] = g.label();
    j["dim"] = a.dim();
    j["mode"] = to_string(a.mode());
    j["ok"] = rep.ok();
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"axiom", c.axiom}, {"passed", c.passed}, {"counterexample", c.counterexample}});
    j["checks"] = checks;
    j["component_dims"] = dims ? ordered_json(std::vector<int>(dims->begin(), dims->end())) : ordered_json(nullptr);
    emit(out, j);
  } else {
    out << g.label() << ": dim " << a.dim() << ", " << to_string(a.mode()) << "\n";
    Table t({"axiom", "status", "counterexample"});
    for (const auto& c : rep.checks) t.add({c.axiom, c.passed ? "pass" : "FAIL", c.counterexample});
    t.print(out);
    if (dims) out << "component dimensions (A0+, A0-, A1+, A1-): " << to_string(*dims) << "\n";
  }
  return rep.ok() ? kOk : kFalse;
}

int cmd_codim(const Globals& g, const std::string& md, std::ostream& out) {
  const SuperAlgebra a = g.load();
  const Multidegree n = parse_multidegree(md);
  const std::size_t c = codimension(a, n, g.options());
  if (g.json()) {
    auto j = header();
    j["algebra"] = g.label();
    j["multidegree"] = std::vector<int>(n.begin(), n.end());
    j["codim"] = c;
    emit(out, j);
  } else {
    out << c << "\n";
  }
  return kOk;
}

int cmd_codim_table(const Globals& g, int max, std::ostream& out) {
  const SuperAlgebra a = g.load();
  const EngineOptions opts = g.options();
  ordered_json entries = ordered_json::array();
  ordered_json graded = ordered_json::array();
  Table t({"n", "multidegree", "codim"});
  Table gt({"n", "graded codim"});
  for (int n = 1; n <= max; ++n) {
    Integer sum = 0;
    for (const auto& m : compositions_of(n)) {
      const std::size_t c = codimension(a, m, opts);
      sum += Integer(static_cast<unsigned long>(multinomial(m))) * static_cast<unsigned long>(c);
      entries.push_back({{"multidegree", std::vector<int>(m.begin(), m.end())}, {"codim", c}});
      t.add({std::to_string(n), to_string(m), std::to_string(c)});
    }
    graded.push_back({{"n", n}, {"codim", sum.get_str()}});
    gt.add({std::to_string(n), sum.get_str()});
  }
  if (g.json()) {
    auto j = header();
    j["algebra"] = g.label();
    j["max_degree"] = max;
    j["entries"] = entries;
    j["graded"] = graded;
    emit(out, j);
  } else {
    t.print(out);
    out << "\n";
    gt.print(out);
  }
  return kOk;
}

void print_cocharacter(const CocharacterReport& r, Table& t) {
  for (const auto& [lambda, m] : r.mults)
    t.add({to_string(r.multidegree), lambda.to_string(), m.get_str(), std::to_string(multi_character_degree(lambda))});
}

int cmd_cocharacter(const Globals& g, const std::string& md, std::ostream& out) {
  const SuperAlgebra a = g.load();
  const CocharacterReport r = cocharacter(a, parse_multidegree(md), g.options());
  if (g.json()) {
    out << to_json(r, 2) << "\n";
  } else {
    out << "codim " << to_string(r.multidegree) << " = " << r.codim << "\n";
    Table t({"multidegree", "lambda", "m", "d"});
    print_cocharacter(r, t);
    t.print(out);
  }
  return kOk;
}

int cmd_hook(const Globals& g, int max, std::ostream& out) {
  const SuperAlgebra a = g.load();
  const HookReport r = hook_report(a, max, g.options());
  if (g.json()) {
    out << to_json(r, 2) << "\n";
    return kOk;
  }
  Table t({"multidegree", "lambda", "m", "d"});
  for (const auto& c : r.reports) print_cocharacter(c, t);
  t.print(out);
  out << "\nminimal hooks (d1,l1;d2,l2;d3,l3;d4,l4):\n";
  for (const auto& h : r.minimal_hooks) out << "  " << h.to_string() << "\n";
  out << "canonical: " << (r.canonical ? r.canonical->to_string() : std::string("none")) << "\n";
  return kOk;
}

int cmd_check(const Globals& g, const std::string& poly, std::ostream& out) {
  const SuperAlgebra a = g.load();
  const EngineOptions opts = g.options();
  const auto sources = polynomial_sources(poly);
  ordered_json results = ordered_json::array();
  bool all = true;
  for (const auto& src : sources) {
    const SuperPolynomial f = parse(src, a.mode());
    if (!f.is_multihomogeneous()) throw std::invalid_argument("polynomial is not multihomogeneous: " + src);
    const IdentityResult r = check_identity(multilinearize(f), a, opts);
    all = all && r.holds;
    if (g.json()) {
      ordered_json w = nullptr;
      if (r.witness) {
        w = ordered_json::object();
        for (const auto& [v, val] : *r.witness) w[v.to_string()] = format_element(a, val);
      }
      results.push_back({{"poly", f.to_string()}, {"identity", r.holds}, {"witness", w}});
      continue;
    }
    if (sources.size() > 1) out << f.to_string() << ": ";
    out << "identity: " << bool_string(r.holds) << "\n";
    if (r.witness) {
      out << "  witness:";
      for (const auto& [v, val] : *r.witness) out << " " << v.to_string() << "=" << format_element(a, val);
      out << " -> " << format_element(a, r.value) << "\n";
    }
  }
  if (g.json()) {
    auto j = header();
    j["algebra"] = g.label();
    j["results"] = results;
    emit(out, j);
  }
  return all ? kOk : kFalse;
}

int cmd_standard(const Globals& g, const std::string& pairs, std::ostream& out) {
  const SuperAlgebra a = g.load();
  const auto spec = parse_pairs(pairs);
  const auto res = check_standard_powers(a, spec, g.options());
  ordered_json results = ordered_json::array();
  Table t({"polynomial", "identity"});
  for (std::size_t i = 0; i < 4; ++i) {
    std::string label = "St_" + std::to_string(spec[i].first) + "(" + std::string(token(kAllVarTypes[i])) + ")";
    if (spec[i].second != 1) label += "^" + std::to_string(spec[i].second);
    results.push_back({{"type", token(kAllVarTypes[i])}, {"k", spec[i].first}, {"m", spec[i].second}, {"identity", res[i]}});
    t.add({label, bool_string(res[i])});
  }
  if (g.json()) {
    auto j = header();
    j["algebra"] = g.label();
    j["results"] = results;
    emit(out, j);
  } else {
    t.print(out);
  }
  return std::all_of(res.begin(), res.end(), [](bool b) { return b; }) ? kOk : kFalse;
}

int cmd_amitsur(const Globals& g, const std::string& rank, int max, std::ostream& out) {
  const SuperAlgebra a = g.load();
  const EngineOptions opts = g.options();
  const QuadHookSpec h = to_hook(parse_pairs(rank));
  const AmitsurResult r = amitsur_check(a, h, opts);
  std::optional<AmitsurEquivalence> eq;
  if (max > 0) eq = amitsur_equivalence_check(a, h, max, opts);
  if (g.json()) {
    auto j = header();
    j["algebra"] = g.label();
    j["rank"] = h.flat();
    j["holds"] = r.holds;
    if (!r.holds) j["witness"] = {{"component", r.component}, {"frame", frame_json(r.frame)}};
    if (eq) {
      j["max_degree"] = max;
      j["hook_contained"] = eq->hook_contained;
      j["agree"] = eq->agree();
    }
    emit(out, j);
  } else {
    out << "amitsur " << h.to_string() << ": " << bool_string(r.holds) << "\n";
    if (!r.holds) out << "  witness: component " << r.component << ", frame " << frame_string(r.frame) << "\n";
    if (eq) {
      out << "cocharacters up to degree " << max << " inside the hook: " << bool_string(eq->hook_contained) << "\n";
      out << "agree: " << bool_string(eq->agree()) << "\n";
    }
  }
  if (eq) return eq->agree() ? kOk : kFalse;
  return r.holds ? kOk : kFalse;
}

int cmd_tideal(const Globals& g, const std::string& gens_arg, const std::string& md, const std::string& mode_text,
               std::ostream& out) {
  const Mode mode = parse_mode(mode_text);
  const Multidegree n = parse_multidegree(md);
  std::vector<SuperPolynomial> gens;
  for (const auto& src : polynomial_sources(gens_arg)) gens.push_back(parse(src, mode));
  const Subspace s = tideal_span(gens, n, mode, g.options());
  if (g.json()) {
    auto j = header();
    j["multidegree"] = std::vector<int>(n.begin(), n.end());
    j["mode"] = to_string(mode);
    j["dimension"] = s.dimension();
    ordered_json basis = ordered_json::array();
    for (const auto& f : s.basis) basis.push_back(f.to_string());
    j["basis"] = basis;
    emit(out, j);
  } else {
    out << "dimension " << s.dimension() << " of " << MultilinearSpace(n, mode).size() << "\n";
    for (const auto& f : s.basis) out << "  " << f.to_string() << "\n";
  }
  return kOk;
}

int cmd_reproduce(const Globals& g, const std::string& name, std::ostream& out) {
  const ReproduceReport r = reproduce(name, g.options());
  std::size_t bad = 0;
  for (const auto& c : r.checks) bad += c.ok ? 0 : 1;
  if (g.json()) {
    auto j = header();
    j["name"] = r.name;
    j["ok"] = r.ok();
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"quantity", c.quantity}, {"expected", c.expected}, {"computed", c.computed}, {"ok", c.ok}});
    j["checks"] = checks;
    emit(out, j);
  } else {
    Table t({"quantity", "expected", "computed", "status"});
    for (const auto& c : r.checks) t.add({c.quantity, c.expected, c.computed, c.ok ? "ok" : "MISMATCH"});
    t.print(out);
    out << r.name << ": " << r.checks.size() - bad << "/" << r.checks.size() << " checks match\n";
  }
  return r.ok() ? kOk : kFalse;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact #-superidentity invariants of finite-dimensional superalgebras", "superpi"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  auto* alg = app.add_option("--algebra", g.algebra,
                             "gallery algebra: grassmann2, grassmann_trunc:M[:nonunital], matrix_super:K, matrix:N");
  auto* file = app.add_option("--algebra-file", g.algebra_file, "algebra JSON file");
  alg->excludes(file);
  file->excludes(alg);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--jobs", g.jobs, "worker threads for frame evaluation")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", g.budget, "maximum evaluation-matrix entries (default 1e8 or $SUPERPI_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-degree", g.max_degree, "largest total degree accepted")->check(CLI::Range(1, 12));

  std::string md, poly, pairs, rank, gens, example, mode = "superinvolution";
  int max = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check the #-superalgebra axioms");
  auto* codim = app.add_subcommand("codim", "codimension c_<n>(A)");
  codim->add_option("--multidegree", md, "n1,n2,n3,n4")->required();
  auto* table = app.add_subcommand("codim-table", "all codimensions up to a total degree");
  table->add_option("--max", max, "largest total degree")->required()->check(CLI::Range(1, 12));
  auto* cochar = app.add_subcommand("cocharacter", "cocharacter multiplicities at one multidegree");
  cochar->add_option("--multidegree", md, "n1,n2,n3,n4")->required();
  auto* hook = app.add_subcommand("hook", "cocharacters up to a degree and minimal quadruple hooks");
  hook->add_option("--max", max, "largest total degree")->required()->check(CLI::Range(0, 12));
  auto* check = app.add_subcommand("check", "test polynomials for being #-superidentities");
  check->add_option("--poly", poly, "polynomial, or file with one polynomial per line")->required();
  auto* standard = app.add_subcommand("standard", "standard-power identities St_k^m per variable type");
  standard->add_option("--pairs", pairs, "k1:m1,k2:m2,k3:m3,k4:m4")->required();
  auto* amitsur = app.add_subcommand("amitsur", "Amitsur #-superidentities of a given rank");
  amitsur->add_option("--rank", rank, "d1:l1,d2:l2,d3:l3,d4:l4")->required();
  amitsur->add_option("--max", max, "also compare with hook containment up to this degree")->check(CLI::Range(0, 12));
  auto* tideal = app.add_subcommand("tideal", "multilinear span of the ideal generated by polynomials");
  tideal->add_option("--gens", gens, "file with one generator per line")->required();
  tideal->add_option("--multidegree", md, "n1,n2,n3,n4")->required();
  tideal->add_option("--mode", mode, "superinvolution or graded_involution")
      ->check(CLI::IsMember({"superinvolution", "graded_involution"}));
  auto* repro = app.add_subcommand("reproduce", "recompute a worked example and diff it against its fixture");
  repro->add_option("example", example, "example name")->required()->check(CLI::IsMember(fixture_names()));

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(g, out);
    if (codim->parsed()) return cmd_codim(g, md, out);
    if (table->parsed()) return cmd_codim_table(g, max, out);
    if (cochar->parsed()) return cmd_cocharacter(g, md, out);
    if (hook->parsed()) return cmd_hook(g, max, out);
    if (check->parsed()) return cmd_check(g, poly, out);
    if (standard->parsed()) return cmd_standard(g, pairs, out);
    if (amitsur->parsed()) return cmd_amitsur(g, rank, max, out);
    if (tideal->parsed()) return cmd_tideal(g, gens, md, mode, out);
    if (repro->parsed()) return cmd_reproduce(g, example, out);
  } catch (const ResourceLimitExceeded& e) {
    err << "superpi: resource limit: " << e.what() << "\n";
    return kError;
  } catch (const ParseError& e) {
    err << "superpi: parse error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "superpi: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

} // namespace superpi::cli
