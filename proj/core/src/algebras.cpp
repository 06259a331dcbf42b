#include "superpi/algebras.hpp"

#include "superpi/errors.hpp"
#include "superpi/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>

namespace superpi {

SuperAlgebra::SuperAlgebra(std::vector<std::string> basis_names, std::vector<int> grading,
                           const std::vector<Constant>& mult, Matrix inv, Mode mode, std::optional<Vector> unit)
    : names_(std::move(basis_names)), grading_(std::move(grading)), inv_(std::move(inv)), mode_(mode),
      unit_(std::move(unit)) {
  const std::size_t n = names_.size();
  if (n == 0) throw ValidationError("algebra dimension must be positive");
  if (grading_.size() != n) throw ValidationError("grading length does not match dimension");
  for (int g : grading_)
    if (g != 0 && g != 1) throw ValidationError("grading entries must be 0 or 1");
  if (inv_.size() != n) throw ValidationError("inv must be dim x dim");
  for (const auto& row : inv_)
    if (row.size() != n) throw ValidationError("inv must be dim x dim");
  if (unit_ && unit_->size() != n) throw ValidationError("unit vector length does not match dimension");
  table_.assign(n * n, {});
  for (const auto& c : mult) {
    if (c.i >= n || c.j >= n || c.k >= n) throw ValidationError("structure constant index out of range");
    if (c.value == 0) continue;
    auto& cell = table_[c.i * n + c.j];
    auto it = std::find_if(cell.begin(), cell.end(), [&](const Term& t) { return t.index == c.k; });
    if (it == cell.end()) cell.push_back({c.k, c.value});
    else it->coeff += c.value;
  }
  for (auto& cell : table_) {
    std::erase_if(cell, [](const Term& t) { return t.coeff == 0; });
    std::sort(cell.begin(), cell.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  }
}

std::vector<SuperAlgebra::Constant> SuperAlgebra::constants() const {
  std::vector<Constant> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& t : product(i, j)) out.push_back({i, j, t.index, t.coeff});
  return out;
}

Vector SuperAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim(), Rational(0));
  v.at(i) = 1;
  return v;
}

Vector SuperAlgebra::apply_inv(const Vector& v) const {
  if (v.size() != dim()) throw SizeMismatch("apply_inv: length mismatch");
  Vector out(dim(), Rational(0));
  for (std::size_t j = 0; j < dim(); ++j) {
    if (v[j] == 0) continue;
    for (std::size_t k = 0; k < dim(); ++k)
      if (inv_[k][j] != 0) out[k] += inv_[k][j] * v[j];
  }
  return out;
}

Vector element_mul(const SuperAlgebra& a, const Vector& v, const Vector& w) {
  const std::size_t n = a.dim();
  if (v.size() != n || w.size() != n) throw SizeMismatch("element_mul: vector length does not match dimension");
  Vector out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] == 0) continue;
      const auto& cell = a.product(i, j);
      if (cell.empty()) continue;
      const Rational vw = v[i] * w[j];
      for (const auto& t : cell) out[t.index] += t.coeff * vw;
    }
  }
  return out;
}

bool ValidationReport::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

std::string ValidationReport::to_string() const {
  std::string s;
  for (const auto& c : checks) {
    s += c.axiom + ": " + (c.passed ? "pass" : "FAIL");
    if (!c.passed) s += " (" + c.counterexample + ")";
    s += "\n";
  }
  return s;
}

namespace {

std::string tuple(const SuperAlgebra& a, std::initializer_list<std::size_t> idx) {
  std::string s;
  for (auto i : idx) {
    if (!s.empty()) s += ", ";
    s += a.basis_names()[i];
  }
  return s;
}

} // namespace

ValidationReport validate(const SuperAlgebra& a) {
  const std::size_t n = a.dim();
  ValidationReport rep;
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(a.basis_vector(i));

  AxiomCheck assoc{"associativity", true, {}};
  for (std::size_t i = 0; i < n && assoc.passed; ++i)
    for (std::size_t j = 0; j < n && assoc.passed; ++j) {
      const Vector ij = element_mul(a, e[i], e[j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (element_mul(a, ij, e[k]) != element_mul(a, e[i], element_mul(a, e[j], e[k]))) {
          assoc.passed = false;
          assoc.counterexample = tuple(a, {i, j, k});
          break;
        }
      }
    }
  rep.checks.push_back(assoc);

  AxiomCheck graded{"grading", true, {}};
  for (std::size_t i = 0; i < n && graded.passed; ++i)
    for (std::size_t j = 0; j < n && graded.passed; ++j)
      for (const auto& t : a.product(i, j))
        if (a.grading()[t.index] != (a.grading()[i] + a.grading()[j]) % 2) {
          graded.passed = false;
          graded.counterexample = tuple(a, {i, j});
          break;
        }
  rep.checks.push_back(graded);

  AxiomCheck invol{"involution", true, {}};
  for (std::size_t i = 0; i < n && invol.passed; ++i)
    if (a.apply_inv(a.apply_inv(e[i])) != e[i]) {
      invol.passed = false;
      invol.counterexample = tuple(a, {i});
    }
  rep.checks.push_back(invol);

  AxiomCheck inv_graded{"inv preserves parity", true, {}};
  for (std::size_t j = 0; j < n && inv_graded.passed; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (a.inv()[k][j] != 0 && a.grading()[k] != a.grading()[j]) {
        inv_graded.passed = false;
        inv_graded.counterexample = tuple(a, {j});
        break;
      }
  rep.checks.push_back(inv_graded);

  AxiomCheck anti{"anti-multiplicativity", true, {}};
  for (std::size_t i = 0; i < n && anti.passed; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lhs = a.apply_inv(element_mul(a, e[i], e[j]));
      Vector rhs = element_mul(a, a.apply_inv(e[j]), a.apply_inv(e[i]));
      if (a.mode() == Mode::Superinvolution && a.grading()[i] == 1 && a.grading()[j] == 1)
        for (auto& x : rhs) x = -x;
      if (lhs != rhs) {
        anti.passed = false;
        anti.counterexample = tuple(a, {i, j});
        break;
      }
    }
  rep.checks.push_back(anti);

  if (a.unit()) {
    AxiomCheck unit{"unit", true, {}};
    const Vector& u = *a.unit();
    for (std::size_t i = 0; i < n && unit.passed; ++i) {
      if (element_mul(a, u, e[i]) != e[i] || element_mul(a, e[i], u) != e[i]) {
        unit.passed = false;
        unit.counterexample = "unit fails on " + tuple(a, {i});
      }
      if (u[i] != 0 && a.grading()[i] != 0) {
        unit.passed = false;
        unit.counterexample = "unit not even";
      }
    }
    if (unit.passed && a.apply_inv(u) != u) {
      unit.passed = false;
      unit.counterexample = "unit not fixed by #";
    }
    rep.checks.push_back(unit);
  }
  return rep;
}

Multidegree ComponentBases::dims() const noexcept {
  return {static_cast<int>(bases[0].size()), static_cast<int>(bases[1].size()), static_cast<int>(bases[2].size()),
          static_cast<int>(bases[3].size())};
}

ComponentBases component_bases(const SuperAlgebra& a) {
  const auto report = validate(a);
  if (!report.ok()) throw ValidationError("algebra fails validation:\n" + report.to_string());
  const std::size_t n = a.dim();
  ComponentBases out;
  for (VarType t : kAllVarTypes) {
    const int sign = is_skew(t) ? -1 : 1;
    Matrix gens;
    for (std::size_t j = 0; j < n; ++j) {
      if (a.grading()[j] != parity(t)) continue;
      Vector v = a.apply_inv(a.basis_vector(j));
      for (auto& x : v) x *= sign;
      v[j] += 1;
      gens.push_back(std::move(v));
    }
    for (const auto& row : row_basis(gens, n)) {
      Vector v;
      for (auto& z : primitive(row)) v.emplace_back(z);
      out.bases[static_cast<std::size_t>(index_of(t))].push_back(std::move(v));
    }
  }
  const auto d = out.dims();
  if (static_cast<std::size_t>(total(d)) != n)
    throw InternalConsistencyError("component dimensions do not sum to the algebra dimension");
  return out;
}

bool in_component(const SuperAlgebra& a, VarType t, const Vector& v) {
  if (v.size() != a.dim()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0 && a.grading()[i] != parity(t)) return false;
  Vector expected = v;
  if (is_skew(t))
    for (auto& x : expected) x = -x;
  return a.apply_inv(v) == expected;
}

namespace {

SuperAlgebra checked(SuperAlgebra a) {
  const auto rep = validate(a);
  if (!rep.ok()) throw ValidationError("gallery algebra fails validation:\n" + rep.to_string());
  return a;
}

Matrix diagonal(const std::vector<int>& d) {
  Matrix m(d.size(), Vector(d.size(), Rational(0)));
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

} // namespace

SuperAlgebra grassmann2() { return grassmann_trunc(2, false); }

SuperAlgebra grassmann_trunc(int m, bool unital) {
  if (m < 1 || m > 12) throw std::invalid_argument("grassmann_trunc: m must lie in 1..12");
  // subsets as bitmasks, ordered by size then lexicographically on the sorted element list
  std::vector<unsigned> subsets;
  for (int size = unital ? 0 : 1; size <= m; ++size) {
    std::vector<bool> pick(static_cast<std::size_t>(m), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      unsigned mask = 0;
      for (int i = 0; i < m; ++i)
        if (pick[static_cast<std::size_t>(i)]) mask |= 1u << i;
      subsets.push_back(mask);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::map<unsigned, std::size_t> index;
  std::vector<std::string> names;
  std::vector<int> grading;
  std::vector<int> inv_diag;
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    const unsigned s = subsets[k];
    index[s] = k;
    std::string name;
    for (int i = 0; i < m; ++i)
      if (s & (1u << i)) name += "e" + std::to_string(i + 1);
    names.push_back(name.empty() ? "1" : name);
    const int size = std::popcount(s);
    grading.push_back(size % 2);
    inv_diag.push_back(size % 2 ? -1 : 1);
  }
  std::vector<SuperAlgebra::Constant> mult;
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = 0; b < subsets.size(); ++b) {
      const unsigned s = subsets[a];
      const unsigned t = subsets[b];
      if (s & t) continue;
      // sign of sorting the concatenation: count pairs (x in s, y in t) with x > y
      int inversions = 0;
      for (int x = 0; x < m; ++x)
        if (s & (1u << x))
          for (int y = 0; y < x; ++y)
            if (t & (1u << y)) ++inversions;
      mult.push_back({a, b, index.at(s | t), Rational(inversions % 2 ? -1 : 1)});
    }
  std::optional<Vector> unit;
  if (unital) {
    unit = Vector(subsets.size(), Rational(0));
    (*unit)[0] = 1;
  }
  return checked(SuperAlgebra(names, grading, mult, diagonal(inv_diag), Mode::Superinvolution, unit));
}

namespace {

std::vector<SuperAlgebra::Constant> matrix_units(int n) {
  std::vector<SuperAlgebra::Constant> mult;
  const auto N = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t l = 0; l < N; ++l) mult.push_back({i * N + j, j * N + l, i * N + l, Rational(1)});
  return mult;
}

std::vector<std::string> matrix_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) names.push_back("e" + std::to_string(i) + std::to_string(j));
  return names;
}

Vector identity_vector(int n) {
  const auto N = static_cast<std::size_t>(n);
  Vector u(N * N, Rational(0));
  for (std::size_t i = 0; i < N; ++i) u[i * N + i] = 1;
  return u;
}

} // namespace

SuperAlgebra matrix_super(int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("matrix_super: k must lie in 1..4");
  const int n = 2 * k;
  const auto N = static_cast<std::size_t>(n);
  const auto K = static_cast<std::size_t>(k);
  std::vector<int> grading;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) grading.push_back((i < K) != (j < K) ? 1 : 0);
  Matrix inv(N * N, Vector(N * N, Rational(0)));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const std::size_t src = i * N + j;
      std::size_t r, c;
      int sign = 1;
      if (i < K && j < K) { // A block -> D block, transposed
        r = K + j;
        c = K + i;
      } else if (i >= K && j >= K) { // D block -> A block, transposed
        r = j - K;
        c = i - K;
      } else if (i < K) { // B block -> -B^t
        r = j - K;
        c = K + i;
        sign = -1;
      } else { // C block -> C^t
        r = K + j;
        c = i - K;
      }
      inv[r * N + c][src] = sign;
    }
  return checked(SuperAlgebra(matrix_names(n), grading, matrix_units(n), inv, Mode::Superinvolution,
                              identity_vector(n)));
}

SuperAlgebra matrix_algebra(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("matrix: n must lie in 1..6");
  const auto N = static_cast<std::size_t>(n);
  Matrix inv(N * N, Vector(N * N, Rational(0)));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) inv[j * N + i][i * N + j] = 1;
  return checked(SuperAlgebra(matrix_names(n), std::vector<int>(N * N, 0), matrix_units(n), inv,
                              Mode::GradedInvolution, identity_vector(n)));
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto p = s.find(sep, start);
    out.emplace_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw std::invalid_argument("expected an integer, got '" + s + "'");
  return v;
}

} // namespace

SuperAlgebra gallery(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string& name = parts[0];
  if (name == "grassmann2" && parts.size() == 1) return grassmann2();
  if (name == "grassmann_trunc" && (parts.size() == 2 || parts.size() == 3)) {
    bool unital = true;
    if (parts.size() == 3) {
      if (parts[2] == "nonunital") unital = false;
      else if (parts[2] != "unital") throw std::invalid_argument("grassmann_trunc flag must be unital|nonunital");
    }
    return grassmann_trunc(parse_int(parts[1]), unital);
  }
  if (name == "matrix_super" && parts.size() == 2) return matrix_super(parse_int(parts[1]));
  if (name == "matrix" && parts.size() == 2) return matrix_algebra(parse_int(parts[1]));
  throw std::invalid_argument("unknown gallery algebra '" + std::string(spec) + "'");
}

SuperAlgebra algebra_from_json(std::string_view json_text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("algebra file is not valid JSON: ") + e.what());
  }
  try {
    auto rat = [](const json& x) -> Rational {
      if (x.is_string()) return parse_rational(x.get<std::string>());
      if (x.is_number_integer()) return Rational(x.get<long>());
      throw ValidationError("rationals must be strings or integers");
    };
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> names;
    if (j.contains("basis")) names = j.at("basis").get<std::vector<std::string>>();
    else
      for (std::size_t i = 0; i < dim; ++i) names.push_back("b" + std::to_string(i));
    if (names.size() != dim) throw ValidationError("basis length does not match dim");
    const auto grading = j.at("grading").get<std::vector<int>>();
    const Mode mode = parse_mode(j.at("mode").get<std::string>());
    std::optional<Vector> unit;
    if (j.contains("unit") && !j.at("unit").is_null()) {
      Vector u;
      for (const auto& x : j.at("unit")) u.push_back(rat(x));
      unit = u;
    }
    std::vector<SuperAlgebra::Constant> mult;
    for (const auto& e : j.at("mult")) {
      if (!e.is_array() || e.size() != 4) throw ValidationError("mult entries must be [i, j, k, \"p/q\"]");
      mult.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::size_t>(), rat(e[3])});
    }
    Matrix inv;
    for (const auto& row : j.at("inv")) {
      Vector r;
      for (const auto& x : row) r.push_back(rat(x));
      inv.push_back(std::move(r));
    }
    return SuperAlgebra(names, grading, mult, inv, mode, unit);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed algebra file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("malformed algebra file: ") + e.what());
  }
}

SuperAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open algebra file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return algebra_from_json(ss.str());
}

std::string algebra_to_json(const SuperAlgebra& a) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["dim"] = a.dim();
  j["basis"] = a.basis_names();
  j["grading"] = a.grading();
  j["mode"] = to_string(a.mode());
  if (a.unit()) {
    ordered_json u = ordered_json::array();
    for (const auto& x : *a.unit()) u.push_back(to_string(x));
    j["unit"] = u;
  } else {
    j["unit"] = nullptr;
  }
  ordered_json mult = ordered_json::array();
  for (const auto& c : a.constants()) mult.push_back({c.i, c.j, c.k, to_string(c.value)});
  j["mult"] = mult;
  ordered_json inv = ordered_json::array();
  for (const auto& row : a.inv()) {
    ordered_json r = ordered_json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    inv.push_back(r);
  }
  j["inv"] = inv;
  return j.dump(2);
}

} // namespace superpi
