#include "oracles.hpp"

#include "superpi/freealg.hpp"
#include "superpi/linalg.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace superpi;

namespace {

constexpr Mode kSuper = Mode::Superinvolution;
constexpr Mode kGraded = Mode::GradedInvolution;

Variable v(VarType t, int i) { return {t, i}; }
SuperPolynomial var(VarType t, int i, Mode m = kSuper) { return SuperPolynomial::variable({t, i}, m); }

SuperPolynomial random_poly(std::mt19937& rng, Mode mode, int terms, int length) {
  std::uniform_int_distribution<int> type(0, 3), index(1, 3), coeff(-5, 5);
  SuperPolynomial f(mode);
  for (int t = 0; t < terms; ++t) {
    Word w;
    for (int j = 0; j < length; ++j) w.push_back({kAllVarTypes[static_cast<std::size_t>(type(rng))], index(rng)});
    const int c = coeff(rng);
    f.add_term(w, oracle::ratio(c == 0 ? 1 : c, 1 + (t % 3)));
  }
  return f;
}

SuperPolynomial random_multilinear(std::mt19937& rng, const Multidegree& n, Mode mode) {
  const auto monos = oracle::monomials(n);
  std::uniform_int_distribution<int> coeff(-4, 4);
  SuperPolynomial f(mode);
  for (const auto& w : monos) f.add_term(w, Rational(coeff(rng)));
  return f;
}

MultiPermutation random_multi(std::mt19937& rng, const Multidegree& n) {
  MultiPermutation s;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto perms = all_permutations(n[i]);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    s.components[i] = perms[pick(rng)];
  }
  return s;
}

} // namespace

TEST(Sharp, SignRulesOnWords) {
  auto [s1, w1] = sharp({v(VarType::Y0, 1), v(VarType::Z0, 1)}, kGraded);
  EXPECT_EQ(s1, -1);
  EXPECT_EQ(w1, (Word{v(VarType::Z0, 1), v(VarType::Y0, 1)}));

  auto [s2, w2] = sharp({v(VarType::Z1, 1), v(VarType::Z1, 2)}, kSuper);
  EXPECT_EQ(s2, -1);
  EXPECT_EQ(w2, (Word{v(VarType::Z1, 2), v(VarType::Z1, 1)}));

  auto [s3, w3] = sharp({v(VarType::Z0, 7), v(VarType::Y1, 1), v(VarType::Z1, 2), v(VarType::Z1, 1)}, kSuper);
  EXPECT_EQ(s3, 1);
  EXPECT_EQ(w3, (Word{v(VarType::Z1, 1), v(VarType::Z1, 2), v(VarType::Y1, 1), v(VarType::Z0, 7)}));

  // Graded mode drops the odd-letter sign.
  auto [s4, w4] = sharp({v(VarType::Y1, 1), v(VarType::Y1, 2)}, kGraded);
  EXPECT_EQ(s4, 1);
  EXPECT_EQ(sharp({v(VarType::Y1, 1), v(VarType::Y1, 2)}, kSuper).first, -1);
}

TEST(Sharp, SingleVariables) {
  EXPECT_EQ(sharp_poly(var(VarType::Y0, 1)), var(VarType::Y0, 1));
  EXPECT_EQ(sharp_poly(var(VarType::Z0, 1)), -var(VarType::Z0, 1));
  EXPECT_EQ(sharp_poly(var(VarType::Y1, 1)), var(VarType::Y1, 1));
  EXPECT_EQ(sharp_poly(var(VarType::Z1, 1)), -var(VarType::Z1, 1));
}

TEST(Sharp, IsAnInvolutionAndReversesProducts) {
  std::mt19937 rng(7);
  for (Mode mode : {kSuper, kGraded})
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = random_poly(rng, mode, 5, 4);
      EXPECT_EQ(sharp_poly(sharp_poly(f)), f);
      const auto g = random_poly(rng, mode, 1, 2);
      const auto h = random_poly(rng, mode, 1, 3);
      // For single words u, v: (uv)^# = ± v^# u^#, sign (−1)^{|u|₁|v|₁} only
      // in superinvolution mode.
      const Word& u = g.terms().begin()->first;
      const Word& w = h.terms().begin()->first;
      int odd_u = 0, odd_w = 0;
      for (const auto& x : u) odd_u += parity(x.type);
      for (const auto& x : w) odd_w += parity(x.type);
      const int sign = mode == kSuper && (odd_u * odd_w) % 2 == 1 ? -1 : 1;
      EXPECT_EQ(sharp_poly(g * h), sharp_poly(h) * sharp_poly(g) * Rational(sign));
    }
}

TEST(Action, ReindexesWithinComponents) {
  const auto f = var(VarType::Y0, 1) * var(VarType::Y0, 2);
  EXPECT_EQ(act(MultiPermutation::identity({2, 0, 0, 0}), f), f);
  MultiPermutation s = MultiPermutation::identity({2, 0, 0, 0});
  s.components[0] = Permutation::from_cycles(2, {{1, 2}});
  EXPECT_EQ(act(s, f), var(VarType::Y0, 2) * var(VarType::Y0, 1));
  EXPECT_THROW(act(MultiPermutation::identity({1, 0, 0, 0}), f), SizeMismatch);
}

TEST(Action, IsALeftModuleAction) {
  std::mt19937 rng(11);
  const Multidegree n{2, 1, 0, 1};
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_multilinear(rng, n, kSuper);
    const auto s = random_multi(rng, n);
    const auto t = random_multi(rng, n);
    EXPECT_EQ(act(s, act(t, f)), act(s * t, f));
    MultiElement a(n), b(n);
    a.add_term(s, Rational(2));
    a.add_term(t, Rational(-1, 3));
    b.add_term(t, Rational(5));
    b.add_term(MultiPermutation::identity(n), Rational(1));
    EXPECT_EQ(ga_act(a, ga_act(b, f)), ga_act(a * b, f));
  }
}

TEST(Action, CommutesWithSharp) {
  std::mt19937 rng(13);
  for (const Multidegree& n : {Multidegree{1, 1, 1, 1}, Multidegree{0, 0, 2, 2}, Multidegree{2, 1, 0, 1}})
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = random_multilinear(rng, n, kSuper);
      const auto s = random_multi(rng, n);
      EXPECT_EQ(sharp_poly(act(s, f)), act(s, sharp_poly(f)));
    }
}

TEST(Action, IdempotentsOnSmallPolynomials) {
  const auto y12 = var(VarType::Y0, 1) * var(VarType::Y0, 2);
  const auto y21 = var(VarType::Y0, 2) * var(VarType::Y0, 1);
  const auto antisym = embed(essential_idempotent(Tableau(Partition({1, 1}), {1, 2})), 0, {2, 0, 0, 0});
  EXPECT_EQ(ga_act(antisym, y12), y12 - y21);

  const auto z12 = var(VarType::Z1, 1) * var(VarType::Z1, 2);
  const auto z21 = var(VarType::Z1, 2) * var(VarType::Z1, 1);
  const auto sym = embed(essential_idempotent(Tableau(Partition({2}), {1, 2})), 3, {0, 0, 0, 2});
  EXPECT_EQ(ga_act(sym, z12), z12 + z21);
}

TEST(Action, CentralIdempotentsGiveIntegerCoefficients) {
  const Multidegree n{2, 0, 1, 1};
  for (const auto& mp : multipartitions_of(n)) {
    const auto e = multi_central_idempotent(mp);
    for (const auto& w : oracle::monomials(n)) {
      const auto g = ga_act(e, SuperPolynomial::monomial(w, kSuper));
      for (const auto& [word, c] : g.terms()) EXPECT_EQ(c.get_den(), 1);
    }
  }
}

TEST(Standard, SmallCases) {
  EXPECT_EQ(standard_poly(1, VarType::Z1, kSuper), var(VarType::Z1, 1));
  EXPECT_EQ(standard_poly(2, VarType::Y0, kSuper),
            var(VarType::Y0, 1) * var(VarType::Y0, 2) - var(VarType::Y0, 2) * var(VarType::Y0, 1));
  const auto st3 = standard_poly(3, VarType::Y0, kSuper);
  EXPECT_EQ(st3.size(), 6u);
  MultiPermutation swap = MultiPermutation::identity({3, 0, 0, 0});
  swap.components[0] = Permutation::from_cycles(3, {{1, 3}});
  EXPECT_EQ(act(swap, st3), -st3);
}

TEST(Standard, MixedTypesAndPowers) {
  const auto mixed = standard_poly({VarType::Y0, VarType::Z0}, kGraded);
  EXPECT_EQ(mixed, SuperPolynomial::variable(v(VarType::Y0, 1), kGraded) *
                           SuperPolynomial::variable(v(VarType::Z0, 2), kGraded) -
                       SuperPolynomial::variable(v(VarType::Z0, 2), kGraded) *
                           SuperPolynomial::variable(v(VarType::Y0, 1), kGraded));
  std::mt19937 rng(3);
  const auto f = random_poly(rng, kSuper, 3, 2);
  EXPECT_EQ(poly_power(f, 1), f);
  EXPECT_EQ(poly_power(var(VarType::Z1, 1), 2), SuperPolynomial::monomial({v(VarType::Z1, 1), v(VarType::Z1, 1)}, kSuper));
  const auto sq = poly_power(standard_poly(2, VarType::Y0, kSuper), 2);
  EXPECT_EQ(sq.size(), 4u);
  for (const auto& [w, c] : sq.terms()) EXPECT_EQ(w.size(), 4u);
}

TEST(Multilinearize, PolarizesRepeatedVariables) {
  const auto z = var(VarType::Z1, 1);
  EXPECT_EQ(multilinearize(z * z), var(VarType::Z1, 1) * var(VarType::Z1, 2) + var(VarType::Z1, 2) * var(VarType::Z1, 1));
  const auto st = standard_poly(3, VarType::Y1, kSuper);
  EXPECT_EQ(multilinearize(st), st);
  EXPECT_THROW(multilinearize(z * z + z), std::invalid_argument);
}

TEST(Multilinearize, IdentifyingCopiesRecoversPowerTimesFactorials) {
  // Each variable of St_2^2 occurs twice; polarization then identification
  // gives back (2!)^2 St_2^2.
  const auto sq = poly_power(standard_poly(2, VarType::Y0, kGraded), 2);
  FreshIndices fresh(sq);
  const auto lin = multilinearize(sq, fresh);
  EXPECT_TRUE(lin.is_multilinear());
  // Fresh copies are y0_3 (of y0_1) and y0_4 (of y0_2).
  const std::map<Variable, Variable> back{{{VarType::Y0, 3}, {VarType::Y0, 1}}, {{VarType::Y0, 4}, {VarType::Y0, 2}}};
  EXPECT_EQ(rename(lin, back), sq * Rational(4));
}

TEST(Amitsur, SmallRanks) {
  const std::vector<FrameSlot> omit1(2, std::nullopt), omit2(3, std::nullopt);
  EXPECT_EQ(amitsur_poly(VarType::Y0, 0, 0, omit1, kSuper), var(VarType::Y0, 1));
  EXPECT_EQ(amitsur_poly(VarType::Y0, 1, 0, omit2, kSuper),
            var(VarType::Y0, 1) * var(VarType::Y0, 2) - var(VarType::Y0, 2) * var(VarType::Y0, 1));
  EXPECT_EQ(amitsur_poly(VarType::Z1, 0, 1, omit2, kSuper),
            var(VarType::Z1, 1) * var(VarType::Z1, 2) + var(VarType::Z1, 2) * var(VarType::Z1, 1));
}

TEST(Amitsur, FrameSlotsUseIndicesPastTheSpecialVariables) {
  const std::vector<FrameSlot> frame{VarType::Y1, std::nullopt};
  EXPECT_EQ(amitsur_poly(VarType::Y0, 0, 0, frame, kSuper), var(VarType::Y1, 2) * var(VarType::Y0, 1));
  EXPECT_THROW(amitsur_poly(VarType::Y0, 0, 0, {std::nullopt}, kSuper), SizeMismatch);
}

TEST(Polynomial, MultilinearityAndMultidegree) {
  const auto f = var(VarType::Y0, 1) * var(VarType::Z1, 1) - var(VarType::Z1, 1) * var(VarType::Y0, 1);
  EXPECT_TRUE(f.is_multilinear());
  EXPECT_EQ(f.multidegree(), (Multidegree{1, 0, 0, 1}));
  EXPECT_FALSE((var(VarType::Y0, 1) * var(VarType::Y0, 1)).is_multilinear());
  EXPECT_TRUE((var(VarType::Y0, 1) * var(VarType::Y0, 1)).is_multihomogeneous());
  EXPECT_THROW(var(VarType::Y0, 1, kSuper) * var(VarType::Y0, 1, kGraded), SizeMismatch);
}

TEST(Polynomial, AllOrderingsSpanFactorialDimension) {
  for (const Multidegree& n : {Multidegree{1, 1, 1, 0}, Multidegree{0, 2, 0, 2}}) {
    const auto monos = oracle::monomials(n);
    std::set<Word> distinct(monos.begin(), monos.end());
    EXPECT_EQ(static_cast<std::int64_t>(distinct.size()), factorial(total(n)));
  }
}

TEST(Polynomial, PrintParseRoundTrip) {
  std::mt19937 rng(17);
  for (Mode mode : {kSuper, kGraded})
    for (int trial = 0; trial < 50; ++trial) {
      const auto f = random_poly(rng, mode, 1 + trial % 6, 1 + trial % 4);
      if (f.is_zero()) continue;
      EXPECT_EQ(parse(f.to_string(), mode), f) << f.to_string();
    }
}
