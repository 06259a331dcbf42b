#include "superpi/engine.hpp"

#include "superpi/errors.hpp"
#include "superpi/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace superpi {

EngineOptions EngineOptions::from_env() {
  EngineOptions o;
  if (const char* env = std::getenv("SUPERPI_BUDGET"); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end && *end == '\0' && v > 0) o.max_entries = v;
  }
  return o;
}

namespace {

// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
// exception thrown by any worker is rethrown on the caller.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(jobs, count);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

const Vector& vector_for(const SuperAlgebra& a, const Variable& v, const EvaluationFrame& frame) {
  auto it = frame.find(v);
  if (it == frame.end()) throw std::invalid_argument("evaluate: no assignment for " + v.to_string());
  if (!in_component(a, v.type, it->second))
    throw std::invalid_argument("evaluate: value of " + v.to_string() + " is not in its component");
  return it->second;
}

Vector evaluate_word(const SuperAlgebra& a, const Word& w, const std::map<Variable, const Vector*>& values) {
  if (w.empty()) {
    if (!a.unit()) throw std::invalid_argument("evaluate: scalar term in a non-unital algebra");
    return *a.unit();
  }
  Vector acc = *values.at(w.front());
  for (std::size_t i = 1; i < w.size() && !is_zero(acc); ++i) acc = element_mul(a, acc, *values.at(w[i]));
  return acc;
}

Vector evaluate_unchecked(const SuperPolynomial& f, const SuperAlgebra& a,
                          const std::map<Variable, const Vector*>& values) {
  Vector out(a.dim(), Rational(0));
  for (const auto& [w, c] : f.terms()) {
    const Vector v = evaluate_word(a, w, values);
    for (std::size_t i = 0; i < out.size(); ++i)
      if (v[i] != 0) out[i] += c * v[i];
  }
  return out;
}

void check_budget(const std::string& what, double predicted, const EngineOptions& opts) {
  if (predicted > opts.max_entries) throw ResourceLimitExceeded(what, predicted, opts.max_entries);
}

} // namespace

Vector evaluate(const SuperPolynomial& f, const SuperAlgebra& a, const EvaluationFrame& frame) {
  std::map<Variable, const Vector*> values;
  for (const auto& v : f.variables()) values[v] = &vector_for(a, v, frame);
  return evaluate_unchecked(f, a, values);
}

IdentityResult check_identity(const SuperPolynomial& f, const SuperAlgebra& a, const EngineOptions& opts) {
  if (!f.is_multilinear()) throw std::invalid_argument("is_identity: polynomial is not multilinear");
  IdentityResult res;
  if (f.is_zero()) return res;
  const auto cb = component_bases(a);
  const auto vars = f.variables();
  double frames = 1;
  for (const auto& v : vars) frames *= static_cast<double>(cb.of(v.type).size());
  if (frames == 0) return res;
  check_budget("identity test over " + std::to_string(vars.size()) + " variables",
               frames * static_cast<double>(f.size()) * static_cast<double>(a.dim()), opts);

  std::vector<std::size_t> digit(vars.size(), 0);
  std::map<Variable, const Vector*> values;
  for (;;) {
    for (std::size_t i = 0; i < vars.size(); ++i) values[vars[i]] = &cb.of(vars[i].type)[digit[i]];
    Vector val = evaluate_unchecked(f, a, values);
    if (!is_zero(val)) {
      res.holds = false;
      EvaluationFrame w;
      for (const auto& [v, p] : values) w[v] = *p;
      res.witness = std::move(w);
      res.value = std::move(val);
      return res;
    }
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      if (++digit[i] < cb.of(vars[i].type).size()) break;
      digit[i] = 0;
    }
    if (i == vars.size()) break;
  }
  return res;
}

bool is_identity(const SuperPolynomial& f, const SuperAlgebra& a, const EngineOptions& opts) {
  return check_identity(f, a, opts).holds;
}

bool is_identity_general(const SuperPolynomial& f, const SuperAlgebra& a, const EngineOptions& opts) {
  if (!f.is_multihomogeneous()) throw std::invalid_argument("is_identity_general: polynomial is not multihomogeneous");
  return is_identity(multilinearize(f), a, opts);
}

// ---- MultilinearSpace --------------------------------------------------

MultilinearSpace::MultilinearSpace(const Multidegree& n, Mode mode)
    : n_(n), mode_(mode), vars_(canonical_variables(n)) {
  for (int x : n)
    if (x < 0) throw std::invalid_argument("multidegree entries must be non-negative");
  for (std::size_t i = 0; i < vars_.size(); ++i) number_[vars_[i]] = static_cast<int>(i);
  if (vars_.size() > 20) throw ResourceLimitExceeded("multilinear space", static_cast<double>(factorial(20)), 0);
  fact_.assign(vars_.size() + 1, 1);
  for (std::size_t i = 1; i <= vars_.size(); ++i) fact_[i] = fact_[i - 1] * i;
  size_ = fact_[vars_.size()];
}

std::vector<int> MultilinearSpace::letters(std::size_t r) const {
  const std::size_t n = vars_.size();
  if (r >= size_) throw std::out_of_range("monomial index out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t f = fact_[n - 1 - p];
    const std::size_t k = r / f;
    r %= f;
    out.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return out;
}

std::size_t MultilinearSpace::rank(const std::vector<int>& letters) const {
  const std::size_t n = vars_.size();
  if (letters.size() != n) throw SizeMismatch("monomial has the wrong length");
  std::vector<bool> used(n, false);
  std::size_t r = 0;
  for (std::size_t p = 0; p < n; ++p) {
    const auto v = static_cast<std::size_t>(letters[p]);
    if (v >= n || used[v]) throw SizeMismatch("letters are not a permutation of the variables");
    std::size_t smaller = 0;
    for (std::size_t u = 0; u < v; ++u)
      if (!used[u]) ++smaller;
    r += smaller * fact_[n - 1 - p];
    used[v] = true;
  }
  return r;
}

Word MultilinearSpace::word(std::size_t r) const {
  Word w;
  for (int v : letters(r)) w.push_back(vars_[static_cast<std::size_t>(v)]);
  return w;
}

std::size_t MultilinearSpace::index(const Word& w) const {
  std::vector<int> l;
  l.reserve(w.size());
  for (const auto& v : w) {
    auto it = number_.find(v);
    if (it == number_.end()) throw SizeMismatch("variable " + v.to_string() + " is not in P" + to_string(n_));
    l.push_back(it->second);
  }
  return rank(l);
}

Vector MultilinearSpace::to_vector(const SuperPolynomial& f) const {
  Vector out(size_, Rational(0));
  for (const auto& [w, c] : f.terms()) out[index(w)] += c;
  return out;
}

SuperPolynomial MultilinearSpace::to_polynomial(const Vector& v) const {
  if (v.size() != size_) throw SizeMismatch("coordinate vector has the wrong length");
  SuperPolynomial f(mode_);
  for (std::size_t r = 0; r < size_; ++r)
    if (v[r] != 0) f.add_term(word(r), v[r]);
  return f;
}

std::vector<int> MultilinearSpace::variable_permutation(const MultiPermutation& sigma) const {
  if (sigma.degree() != n_) throw SizeMismatch("permutation degree does not match the multidegree");
  std::vector<int> out;
  out.reserve(vars_.size());
  for (const auto& v : vars_) {
    const auto comp = static_cast<std::size_t>(index_of(v.type));
    out.push_back(number_.at(Variable{v.type, sigma.components[comp](v.index)}));
  }
  return out;
}

// ---- evaluation matrix ---------------------------------------------------

namespace {

// Values of all n! orderings of args, indexed by monomial rank. A zero
// product is left as an empty vector.
std::vector<Vector> monomial_values(const SuperAlgebra& a, const std::vector<const Vector*>& args,
                                    const std::vector<std::size_t>& fact) {
  const std::size_t n = args.size();
  std::vector<Vector> out(fact[n]);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t depth, const Vector& prefix, std::size_t r) -> void {
    if (depth == n) {
      out[r] = prefix;
      return;
    }
    std::size_t smaller = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      const std::size_t child = r + smaller * fact[n - 1 - depth];
      ++smaller;
      Vector next = depth == 0 ? *args[v] : element_mul(a, prefix, *args[v]);
      if (is_zero(next)) continue;
      used[v] = true;
      self(self, depth + 1, next, child);
      used[v] = false;
    }
  };
  rec(rec, 0, Vector{}, 0);
  return out;
}

ImageSpace build_image(const SuperAlgebra& a, MultilinearSpace space,
                       const std::vector<const std::vector<Vector>*>& choices, const EngineOptions& opts) {
  const int deg = space.degree();
  if (deg < 1) throw std::invalid_argument("multidegree must have positive total degree");
  if (deg > opts.max_degree)
    throw ResourceLimitExceeded("total degree " + std::to_string(deg) + " above the degree cap",
                                static_cast<double>(deg), static_cast<double>(opts.max_degree));
  double frames = 1;
  for (const auto* c : choices) frames *= static_cast<double>(c->size());
  check_budget("evaluation matrix for P" + to_string(space.multidegree()),
               static_cast<double>(space.size()) * frames * static_cast<double>(a.dim()), opts);

  std::vector<std::size_t> fact(static_cast<std::size_t>(deg) + 1, 1);
  for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * i;

  EchelonBasis basis(space.size());
  const auto total_frames = static_cast<std::size_t>(frames);
  const std::size_t batch = 64 * std::max(1u, opts.jobs);
  std::vector<std::vector<Vector>> results;
  for (std::size_t start = 0; start < total_frames && !basis.full(); start += batch) {
    const std::size_t count = std::min(batch, total_frames - start);
    results.assign(count, {});
    parallel_for(count, opts.jobs, [&](std::size_t k) {
      std::size_t id = start + k;
      std::vector<const Vector*> args(choices.size());
      for (std::size_t i = 0; i < choices.size(); ++i) {
        const std::size_t b = choices[i]->size();
        args[i] = &(*choices[i])[id % b];
        id /= b;
      }
      results[k] = monomial_values(a, args, fact);
    });
    for (const auto& vals : results) {
      for (std::size_t c = 0; c < a.dim() && !basis.full(); ++c) {
        Vector col(space.size(), Rational(0));
        bool nonzero = false;
        for (std::size_t r = 0; r < vals.size(); ++r)
          if (!vals[r].empty() && vals[r][c] != 0) {
            col[r] = vals[r][c];
            nonzero = true;
          }
        if (nonzero) basis.insert(col);
      }
      if (basis.full()) break;
    }
  }
  return ImageSpace{std::move(space), basis.rref(), basis.pivots()};
}

} // namespace

ImageSpace image_space(const SuperAlgebra& a, const Multidegree& n, const EngineOptions& opts) {
  MultilinearSpace space(n, a.mode());
  if (space.degree() > opts.max_degree)
    throw ResourceLimitExceeded("total degree " + std::to_string(space.degree()) + " above the degree cap",
                                static_cast<double>(space.degree()), static_cast<double>(opts.max_degree));
  const auto cb = component_bases(a);
  std::vector<const std::vector<Vector>*> choices;
  for (const auto& v : space.variables()) choices.push_back(&cb.of(v.type));
  return build_image(a, std::move(space), choices, opts);
}

std::size_t codimension(const SuperAlgebra& a, const Multidegree& n, const EngineOptions& opts) {
  return image_space(a, n, opts).rank();
}

Integer graded_codimension(const SuperAlgebra& a, int n, const EngineOptions& opts) {
  if (n < 1) throw std::invalid_argument("graded_codimension: n must be positive");
  Integer sum = 0;
  for (const auto& m : compositions_of(n)) {
    const std::size_t c = codimension(a, m, opts);
    if (c != 0) sum += Integer(static_cast<unsigned long>(multinomial(m))) * static_cast<unsigned long>(c);
  }
  return sum;
}

std::size_t ordinary_codimension(const SuperAlgebra& a, int n, const EngineOptions& opts) {
  if (n < 1) throw std::invalid_argument("ordinary_codimension: n must be positive");
  std::vector<Vector> full;
  for (std::size_t i = 0; i < a.dim(); ++i) full.push_back(a.basis_vector(i));
  MultilinearSpace space({n, 0, 0, 0}, a.mode());
  std::vector<const std::vector<Vector>*> choices(static_cast<std::size_t>(n), &full);
  return build_image(a, std::move(space), choices, opts).rank();
}

Rational quotient_trace(const ImageSpace& image, const MultiPermutation& sigma) {
  const auto& sp = image.space;
  const auto pi = sp.variable_permutation(sigma);
  std::vector<int> inv(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) inv[static_cast<std::size_t>(pi[i])] = static_cast<int>(i);
  Rational tr = 0;
  for (std::size_t i = 0; i < image.basis.size(); ++i) {
    auto l = sp.letters(image.pivots[i]);
    for (auto& x : l) x = inv[static_cast<std::size_t>(x)];
    tr += image.basis[i][sp.rank(l)];
  }
  return tr;
}

Rational quotient_trace(const SuperAlgebra& a, const Multidegree& n, const MultiPermutation& sigma,
                        const EngineOptions& opts) {
  return quotient_trace(image_space(a, n, opts), sigma);
}

CocharacterReport cocharacter(const SuperAlgebra& a, const Multidegree& n, const EngineOptions& opts) {
  CocharacterReport rep;
  rep.multidegree = n;
  const ImageSpace image = image_space(a, n, opts);
  rep.codim = image.rank();
  if (rep.codim == 0) return rep;

  struct ClassTuple {
    std::array<Partition, 4> type;
    Integer size;
    Rational trace;
  };
  std::array<std::vector<ConjugacyClass>, 4> per;
  for (std::size_t i = 0; i < 4; ++i) per[i] = conjugacy_classes(n[i]);
  std::vector<ClassTuple> tuples;
  for (const auto& c0 : per[0])
    for (const auto& c1 : per[1])
      for (const auto& c2 : per[2])
        for (const auto& c3 : per[3]) {
          MultiPermutation rep_perm{{c0.representative, c1.representative, c2.representative, c3.representative}};
          Integer size = Integer(static_cast<long>(c0.size)) * c1.size * c2.size * c3.size;
          tuples.push_back({{c0.type, c1.type, c2.type, c3.type}, size, quotient_trace(image, rep_perm)});
        }

  Integer order = 1;
  for (int x : n) order *= static_cast<unsigned long>(factorial(x));
  Integer check = 0;
  for (const auto& lambda : multipartitions_of(n)) {
    Rational sum = 0;
    for (const auto& t : tuples) {
      if (t.trace == 0) continue;
      sum += Rational(t.size) * Rational(static_cast<long>(multi_character_value(lambda, t.type))) * t.trace;
    }
    sum /= Rational(order);
    if (sum.get_den() != 1 || sum < 0)
      throw InternalConsistencyError("multiplicity of " + lambda.to_string() + " in P" + to_string(n) + " is " +
                                     to_string(sum));
    if (sum == 0) continue;
    rep.mults[lambda] = sum.get_num();
    check += sum.get_num() * static_cast<unsigned long>(multi_character_degree(lambda));
  }
  if (check != static_cast<unsigned long>(rep.codim))
    throw InternalConsistencyError("sum of m*d is " + check.get_str() + " but the codimension of P" + to_string(n) +
                                   " is " + std::to_string(rep.codim));
  return rep;
}

std::vector<SuperPolynomial> identity_space(const SuperAlgebra& a, const Multidegree& n, const EngineOptions& opts) {
  const ImageSpace image = image_space(a, n, opts);
  std::vector<SuperPolynomial> out;
  for (const auto& v : nullspace(image.basis, image.space.size())) {
    Vector p;
    for (auto& z : primitive(v)) p.emplace_back(z);
    out.push_back(image.space.to_polynomial(p));
  }
  return out;
}

bool multiplicity_oracle(const SuperAlgebra& a, const MultiPartition& mu, const EngineOptions& opts) {
  const Multidegree n = mu.multidegree();
  MultilinearSpace space(n, a.mode());
  if (space.degree() > opts.max_degree)
    throw ResourceLimitExceeded("total degree " + std::to_string(space.degree()) + " above the degree cap",
                                static_cast<double>(space.degree()), static_cast<double>(opts.max_degree));
  const MultiElement e = multi_essential_idempotent(MultiTableau::row_reading(mu));
  check_budget("multiplicity oracle for " + mu.to_string(),
               static_cast<double>(space.size()) * static_cast<double>(e.size()) * static_cast<double>(a.dim()),
               opts);
  for (std::size_t r = 0; r < space.size(); ++r) {
    const auto f = ga_act(e, SuperPolynomial::monomial(space.word(r), a.mode()));
    if (!is_identity(f, a, opts)) return false;
  }
  return true;
}

// ---- T-ideal spans -------------------------------------------------------

namespace {

struct SpanBuilder {
  const MultilinearSpace& space;
  Mode mode;
  EchelonBasis basis;

  int parity_of(unsigned mask) const {
    int p = 0;
    for (std::size_t i = 0; i < space.variables().size(); ++i)
      if (mask & (1u << i)) p += parity(space.variables()[i].type);
    return p % 2;
  }

  std::vector<int> members(unsigned mask) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < space.variables().size(); ++i)
      if (mask & (1u << i)) out.push_back(static_cast<int>(i));
    return out;
  }

  Word to_word(const std::vector<int>& letters) const {
    Word w;
    for (int v : letters) w.push_back(space.variables()[static_cast<std::size_t>(v)]);
    return w;
  }

  // Every ordering of the letters in mask as a word.
  std::vector<Word> orderings(unsigned mask) const {
    std::vector<Word> out;
    auto m = members(mask);
    do {
      out.push_back(to_word(m));
    } while (std::next_permutation(m.begin(), m.end()));
    return out;
  }

  void emit(const SuperPolynomial& core, unsigned rest) {
    // split the unused letters between a left and a right word
    for (unsigned left = rest;; left = (left - 1) & rest) {
      const unsigned right = rest & ~left;
      for (const auto& u : orderings(left))
        for (const auto& v : orderings(right)) {
          const auto f = SuperPolynomial::monomial(u, mode) * core * SuperPolynomial::monomial(v, mode);
          if (!f.is_zero()) basis.insert(space.to_vector(f));
          if (basis.full()) return;
        }
      if (left == 0) break;
    }
  }

  void assign(const SuperPolynomial& g, const std::vector<Variable>& vars, std::size_t j, unsigned free,
              std::map<Variable, SuperPolynomial>& subs) {
    if (basis.full()) return;
    if (j == vars.size()) {
      const auto core = substitute(g, subs);
      if (!core.is_zero()) emit(core, free);
      return;
    }
    const VarType t = vars[j].type;
    for (unsigned s = free; s != 0; s = (s - 1) & free) {
      if (parity_of(s) != parity(t)) continue;
      for (const auto& w : orderings(s)) {
        auto [sign, rev] = sharp(w, mode);
        SuperPolynomial val = SuperPolynomial::monomial(w, mode);
        val += SuperPolynomial::monomial(rev, mode, Rational(is_skew(t) ? -sign : sign));
        if (val.is_zero()) continue;
        subs.insert_or_assign(vars[j], val);
        assign(g, vars, j + 1, free & ~s, subs);
        if (basis.full()) return;
      }
    }
    subs.erase(vars[j]);
  }
};

} // namespace

Subspace tideal_span(const std::vector<SuperPolynomial>& generators, const Multidegree& n, Mode mode,
                     const EngineOptions& opts) {
  MultilinearSpace space(n, mode);
  const int deg = space.degree();
  if (deg < 1) throw std::invalid_argument("multidegree must have positive total degree");
  if (deg > opts.max_degree)
    throw ResourceLimitExceeded("total degree " + std::to_string(deg) + " above the degree cap",
                                static_cast<double>(deg), static_cast<double>(opts.max_degree));
  std::vector<SuperPolynomial> gens;
  for (const auto& g : generators) {
    if (g.mode() != mode) throw SizeMismatch("generator mode differs from the requested mode");
    if (g.is_zero()) continue;
    if (!g.is_multilinear()) throw std::invalid_argument("tideal_span: generator " + g.to_string() + " is not multilinear");
    gens.push_back(g);
    gens.push_back(sharp_poly(g));
  }
  double predicted = 0;
  for (const auto& g : gens)
    predicted += std::pow(static_cast<double>(g.variables().size() + 2), deg) *
                 static_cast<double>(space.size()) * static_cast<double>(space.size());
  check_budget("T-ideal span in P" + to_string(n), predicted, opts);

  SpanBuilder b{space, mode, EchelonBasis(space.size())};
  const unsigned all = (1u << deg) - 1;
  for (const auto& g : gens) {
    const auto vars = g.variables();
    if (static_cast<int>(vars.size()) > deg) continue;
    std::map<Variable, SuperPolynomial> subs;
    b.assign(g, vars, 0, all, subs);
    if (b.basis.full()) break;
  }
  Subspace out;
  out.multidegree = n;
  for (const auto& row : b.basis.rref()) out.basis.push_back(space.to_polynomial(row));
  return out;
}

bool same_span(const std::vector<SuperPolynomial>& a, const std::vector<SuperPolynomial>& b, const Multidegree& n,
               Mode mode) {
  MultilinearSpace space(n, mode);
  EchelonBasis ea(space.size()), eb(space.size()), both(space.size());
  for (const auto& f : a) {
    ea.insert(space.to_vector(f));
    both.insert(space.to_vector(f));
  }
  for (const auto& f : b) {
    eb.insert(space.to_vector(f));
    both.insert(space.to_vector(f));
  }
  return ea.rank() == both.rank() && eb.rank() == both.rank();
}

} // namespace superpi
