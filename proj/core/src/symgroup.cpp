#include "superpi/symgroup.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <stdexcept>

namespace superpi {

Permutation::Permutation(std::vector<int> images_one_based) {
  const auto n = images_one_based.size();
  std::vector<bool> seen(n, false);
  map_.reserve(n);
  for (int v : images_one_based) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v - 1)] = true;
    map_.push_back(v - 1);
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.map_.resize(static_cast<std::size_t>(n));
  std::iota(p.map_.begin(), p.map_.end(), 0);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(n);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Permutation c = identity(n);
    const auto& cyc = *it;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int from = cyc[k];
      const int to = cyc[(k + 1) % cyc.size()];
      if (from < 1 || from > n || to < 1 || to > n) throw std::invalid_argument("cycle entry out of range");
      c.map_[static_cast<std::size_t>(from - 1)] = to - 1;
    }
    // the cycles are applied right to left, so later cycles act first
    result = c * result;
  }
  // validate bijectivity (overlapping malformed cycles)
  return Permutation(result.images());
}

std::vector<int> Permutation::images() const {
  std::vector<int> out;
  out.reserve(map_.size());
  for (int v : map_) out.push_back(v + 1);
  return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw SizeMismatch("composing permutations of different degree");
  Permutation p;
  p.map_.resize(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) p.map_[i] = map_[static_cast<std::size_t>(rhs.map_[i])];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.map_.resize(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) p.map_[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
  return p;
}

int Permutation::sign() const {
  int even_cycles = 0;
  const Partition type = cycle_type(*this);
  for (int len : type.parts())
    if (len % 2 == 0) ++even_cycles;
  return even_cycles % 2 ? -1 : 1;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(map_[i] + 1);
  }
  return s + "]";
}

Partition cycle_type(const Permutation& sigma) {
  const int n = sigma.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> lens;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = sigma(j)) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(std::move(lens));
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  if (n < 0) throw std::invalid_argument("conjugacy_classes: negative n");
  std::vector<ConjugacyClass> out;
  const std::int64_t order = factorial(n);
  for (const auto& mu : partitions_of(n)) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int len : mu.parts()) {
      std::vector<int> c;
      for (int k = 0; k < len; ++k) c.push_back(next++);
      cycles.push_back(std::move(c));
    }
    // centralizer order z_μ = Π i^{m_i} m_i!
    std::int64_t z = 1;
    for (int len = 1; len <= n; ++len) {
      const auto m = std::count(mu.parts().begin(), mu.parts().end(), len);
      for (int k = 0; k < m; ++k) z *= len;
      z *= factorial(static_cast<int>(m));
    }
    out.push_back({mu, Permutation::from_cycles(n, cycles), order / z});
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

MultiPermutation MultiPermutation::identity(const Multidegree& n) {
  MultiPermutation m;
  for (std::size_t i = 0; i < 4; ++i) m.components[i] = Permutation::identity(n[i]);
  return m;
}

Multidegree MultiPermutation::degree() const noexcept {
  return {components[0].degree(), components[1].degree(), components[2].degree(), components[3].degree()};
}

MultiPermutation MultiPermutation::operator*(const MultiPermutation& rhs) const {
  MultiPermutation m;
  for (std::size_t i = 0; i < 4; ++i) m.components[i] = components[i] * rhs.components[i];
  return m;
}

MultiPermutation MultiPermutation::inverse() const {
  MultiPermutation m;
  for (std::size_t i = 0; i < 4; ++i) m.components[i] = components[i].inverse();
  return m;
}

std::string MultiPermutation::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += components[i].to_string();
  }
  return s + ")";
}

std::array<Partition, 4> cycle_type(const MultiPermutation& sigma) {
  return {cycle_type(sigma.components[0]), cycle_type(sigma.components[1]), cycle_type(sigma.components[2]),
          cycle_type(sigma.components[3])};
}

namespace {

// Beta-set (first-column hook lengths) of λ with exactly `len` beads.
std::vector<int> beta_set(const std::vector<int>& parts) {
  const auto len = static_cast<int>(parts.size());
  std::vector<int> beads;
  for (int i = 0; i < len; ++i) beads.push_back(parts[static_cast<std::size_t>(i)] + (len - 1 - i));
  return beads; // strictly decreasing
}

std::vector<int> from_beta_set(std::vector<int> beads) {
  std::sort(beads.rbegin(), beads.rend());
  const auto len = static_cast<int>(beads.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int p = beads[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

std::int64_t murnaghan_nakayama(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t k);

struct CharacterMemo {
  std::shared_mutex mutex;
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> table;
};

CharacterMemo& memo() {
  static CharacterMemo m;
  return m;
}

std::int64_t murnaghan_nakayama(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t k) {
  if (k == mu.size()) return lambda.empty() ? 1 : 0;
  const int r = mu[k];
  auto beads = beta_set(lambda);
  std::set<int> occupied(beads.begin(), beads.end());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int b = beads[i];
    const int target = b - r;
    if (target < 0 || occupied.count(target)) continue;
    int between = 0;
    for (int x : beads)
      if (x > target && x < b) ++between;
    auto moved = beads;
    moved[i] = target;
    const auto sub = from_beta_set(moved);
    const std::int64_t v = murnaghan_nakayama(sub, mu, k + 1);
    total += (between % 2 ? -v : v);
  }
  return total;
}

} // namespace

std::int64_t character_value(const Partition& lambda, const Partition& cls) {
  if (lambda.size() != cls.size()) throw SizeMismatch("character_value: |λ| != |class|");
  auto key = std::make_pair(lambda.parts(), cls.parts());
  auto& m = memo();
  {
    std::shared_lock lock(m.mutex);
    auto it = m.table.find(key);
    if (it != m.table.end()) return it->second;
  }
  const std::int64_t v = murnaghan_nakayama(lambda.parts(), cls.parts(), 0);
  std::unique_lock lock(m.mutex);
  m.table.emplace(std::move(key), v);
  return v;
}

std::int64_t character_value(const Partition& lambda, const Permutation& sigma) {
  return character_value(lambda, cycle_type(sigma));
}

std::int64_t multi_character_value(const MultiPartition& lambda, const std::array<Partition, 4>& cls) {
  std::int64_t v = 1;
  for (std::size_t i = 0; i < 4; ++i) v *= character_value(lambda.components[i], cls[i]);
  return v;
}

std::int64_t multi_character_value(const MultiPartition& lambda, const MultiPermutation& sigma) {
  return multi_character_value(lambda, cycle_type(sigma));
}

namespace {

// All permutations of n points that map each block to itself.
std::vector<Permutation> block_stabilizer(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> out{Permutation::identity(n)};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Permutation> local;
    std::vector<int> arrangement = sorted;
    do {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 1);
      for (std::size_t k = 0; k < sorted.size(); ++k)
        img[static_cast<std::size_t>(sorted[k] - 1)] = arrangement[k];
      local.emplace_back(img);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    std::vector<Permutation> next;
    next.reserve(out.size() * local.size());
    for (const auto& a : out)
      for (const auto& b : local) next.push_back(a * b);
    out = std::move(next);
  }
  return out;
}

} // namespace

std::vector<Permutation> row_stabilizer(const Tableau& t) { return block_stabilizer(t.size(), t.rows()); }
std::vector<Permutation> column_stabilizer(const Tableau& t) { return block_stabilizer(t.size(), t.columns()); }

SnElement essential_idempotent(const Tableau& t) {
  const auto rows = row_stabilizer(t);
  const auto cols = column_stabilizer(t);
  SnElement e(t.size());
  for (const auto& s : rows)
    for (const auto& c : cols) e.add_term(s * c, Rational(c.sign()));
  return e;
}

MultiElement tensor(const std::array<SnElement, 4>& parts) {
  Multidegree deg{parts[0].degree(), parts[1].degree(), parts[2].degree(), parts[3].degree()};
  MultiElement out(deg);
  for (const auto& [a, ca] : parts[0].terms())
    for (const auto& [b, cb] : parts[1].terms())
      for (const auto& [c, cc] : parts[2].terms())
        for (const auto& [d, cd] : parts[3].terms()) out.add_term(MultiPermutation{{a, b, c, d}}, ca * cb * cc * cd);
  return out;
}

MultiElement multi_essential_idempotent(const MultiTableau& t) {
  return tensor({essential_idempotent(t.components[0]), essential_idempotent(t.components[1]),
                 essential_idempotent(t.components[2]), essential_idempotent(t.components[3])});
}

SnElement central_idempotent(const Partition& lambda) {
  SnElement e(lambda.size());
  for (const auto& s : all_permutations(lambda.size())) e.add_term(s, Rational(character_value(lambda, s)));
  return e;
}

MultiElement multi_central_idempotent(const MultiPartition& lambda) {
  return tensor({central_idempotent(lambda.components[0]), central_idempotent(lambda.components[1]),
                 central_idempotent(lambda.components[2]), central_idempotent(lambda.components[3])});
}

MultiElement embed(const SnElement& a, int component, const Multidegree& n) {
  if (component < 0 || component > 3) throw std::invalid_argument("component index outside 0..3");
  if (a.degree() != n[static_cast<std::size_t>(component)]) throw SizeMismatch("embed: degree mismatch");
  std::array<SnElement, 4> parts{SnElement::unit(n[0]), SnElement::unit(n[1]), SnElement::unit(n[2]),
                                 SnElement::unit(n[3])};
  parts[static_cast<std::size_t>(component)] = a;
  return tensor(parts);
}

bool decompose_check(int n, int max_n) {
  if (n < 0) throw std::invalid_argument("decompose_check: negative n");
  if (n > max_n)
    throw ResourceLimitExceeded("decompose_check materializes FS_" + std::to_string(n),
                                static_cast<double>(factorial(n)), static_cast<double>(factorial(max_n)));
  SnElement sum(n);
  const Rational nf(factorial(n));
  for (const auto& lambda : partitions_of(n)) {
    const Rational w = Rational(character_degree(lambda)) / nf;
    sum += central_idempotent(lambda) * w;
  }
  return sum == SnElement::unit(n);
}

} // namespace superpi
