#include "superpi/algebras.hpp"
#include "superpi/errors.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace superpi;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Vector vec(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

const AxiomCheck* find_check(const ValidationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.axiom == name) return &c;
  return nullptr;
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

} // namespace

TEST(Gallery, EveryAlgebraValidates) {
  for (const char* name : {"grassmann2", "grassmann_trunc:2", "grassmann_trunc:3", "grassmann_trunc:3:nonunital",
                           "matrix_super:1", "matrix_super:2", "matrix:2", "matrix:3"}) {
    const auto a = gallery(name);
    const auto r = validate(a);
    EXPECT_TRUE(r.ok()) << name << "\n" << r.to_string();
    const auto dims = component_bases(a).dims();
    EXPECT_EQ(static_cast<std::size_t>(dims[0] + dims[1] + dims[2] + dims[3]), a.dim()) << name;
    if (a.unit()) {
      EXPECT_EQ(a.apply_inv(*a.unit()), *a.unit()) << name;
    }
  }
  EXPECT_THROW(gallery("octonions"), std::invalid_argument);
  EXPECT_THROW(gallery("matrix:x"), std::invalid_argument);
}

TEST(Gallery, GrassmannTwoGenerators) {
  const auto g = grassmann2();
  EXPECT_EQ(g.dim(), 3u);
  EXPECT_EQ(g.grading(), (std::vector<int>{1, 1, 0}));
  EXPECT_FALSE(g.unit().has_value());
  EXPECT_EQ(element_mul(g, g.basis_vector(0), g.basis_vector(1)), g.basis_vector(2));
  EXPECT_EQ(element_mul(g, g.basis_vector(1), g.basis_vector(0)), vec({0, 0, -1}));
  EXPECT_EQ(element_mul(g, g.basis_vector(0), g.basis_vector(0)), vec({0, 0, 0}));
  EXPECT_THROW(element_mul(g, vec({1, 0}), g.basis_vector(0)), SizeMismatch);
}

TEST(Gallery, GrassmannComponents) {
  const auto cb = component_bases(grassmann2());
  EXPECT_EQ(cb.dims(), (Multidegree{1, 0, 0, 2}));
  EXPECT_EQ(cb.of(VarType::Y0), (std::vector<Vector>{vec({0, 0, 1})}));
  EXPECT_EQ(cb.of(VarType::Z1), (std::vector<Vector>{vec({1, 0, 0}), vec({0, 1, 0})}));
}

TEST(Gallery, TruncatedGrassmann) {
  const auto e2 = grassmann_trunc(2);
  EXPECT_EQ(e2.dim(), 4u);
  ASSERT_TRUE(e2.unit().has_value());
  for (std::size_t i = 0; i < e2.dim(); ++i) {
    EXPECT_EQ(element_mul(e2, *e2.unit(), e2.basis_vector(i)), e2.basis_vector(i));
    EXPECT_EQ(element_mul(e2, e2.basis_vector(i), *e2.unit()), e2.basis_vector(i));
  }
  const auto nonunital = grassmann_trunc(2, false);
  const auto g = grassmann2();
  EXPECT_EQ(nonunital.dim(), g.dim());
  EXPECT_EQ(nonunital.grading(), g.grading());
  EXPECT_EQ(nonunital.inv(), g.inv());
  EXPECT_EQ(algebra_to_json(nonunital).size() > 0, true);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(element_mul(nonunital, nonunital.basis_vector(i), nonunital.basis_vector(j)),
                element_mul(g, g.basis_vector(i), g.basis_vector(j)));
  EXPECT_EQ(component_bases(grassmann_trunc(4)).dims(), (Multidegree{8, 0, 0, 8}));
}

TEST(Gallery, TransposeSuperinvolutionOnM11) {
  const auto m = matrix_super(1);
  EXPECT_EQ(m.dim(), 4u);
  EXPECT_EQ(m.mode(), Mode::Superinvolution);
  EXPECT_EQ(m.grading(), (std::vector<int>{0, 1, 1, 0}));
  // (a b; c d) ↦ (d −b; c a), basis e11, e12, e21, e22.
  EXPECT_EQ(m.apply_inv(vec({1, 0, 0, 0})), vec({0, 0, 0, 1}));
  EXPECT_EQ(m.apply_inv(vec({0, 1, 0, 0})), vec({0, -1, 0, 0}));
  EXPECT_EQ(m.apply_inv(vec({0, 0, 1, 0})), vec({0, 0, 1, 0}));
  EXPECT_EQ(component_bases(m).dims(), (Multidegree{1, 1, 1, 1}));
  EXPECT_EQ(component_bases(matrix_super(2)).dims(), (Multidegree{4, 4, 4, 4}));
}

TEST(Gallery, OrdinaryMatricesWithTranspose) {
  const auto m = matrix_algebra(2);
  EXPECT_EQ(m.mode(), Mode::GradedInvolution);
  EXPECT_EQ(component_bases(m).dims(), (Multidegree{3, 1, 0, 0}));
}

TEST(Components, MembershipRespectsParityAndEigenvalue) {
  const auto g = grassmann2();
  EXPECT_TRUE(in_component(g, VarType::Z1, vec({2, -1, 0})));
  EXPECT_FALSE(in_component(g, VarType::Z1, vec({1, 0, 1})));
  EXPECT_FALSE(in_component(g, VarType::Y1, vec({1, 0, 0})));
  EXPECT_TRUE(in_component(g, VarType::Y0, vec({0, 0, 3})));
  EXPECT_TRUE(in_component(g, VarType::Y1, vec({0, 0, 0})));
}

TEST(Validation, FlippedSignOnOneGeneratorBreaksAntiMultiplicativity) {
  const auto a = load_algebra_file(std::string(SUPERPI_TEST_DATA) + "/broken_sharp.json");
  const auto r = validate(a);
  EXPECT_FALSE(r.ok());
  bool anti_failed = false;
  for (const auto& c : r.checks)
    if (!c.passed) {
      EXPECT_FALSE(c.counterexample.empty());
      anti_failed |= c.axiom.find("anti") != std::string::npos;
    }
  EXPECT_TRUE(anti_failed) << r.to_string();
  EXPECT_THROW(component_bases(a), ValidationError);
}

TEST(Validation, DetectsEachBrokenAxiom) {
  // Non-associative: e0 e0 = e1, e1 e0 = e0, e0 e1 = 0.
  const SuperAlgebra nonassoc({"a", "b"}, {0, 0}, {{0, 0, 1, Rational(1)}, {1, 0, 0, Rational(1)}},
                              identity_matrix(2), Mode::GradedInvolution);
  EXPECT_FALSE(find_check(validate(nonassoc), "associativity")->passed);

  // Odd times odd landing in an odd element.
  const SuperAlgebra badgrade({"u"}, {1}, {{0, 0, 0, Rational(1)}}, identity_matrix(1), Mode::GradedInvolution);
  EXPECT_FALSE(find_check(validate(badgrade), "grading")->passed);

  Matrix not_invol = identity_matrix(2);
  not_invol[0][0] = 2;
  const SuperAlgebra badinv({"a", "b"}, {0, 0}, {}, not_invol, Mode::GradedInvolution);
  EXPECT_FALSE(find_check(validate(badinv), "involution")->passed);

  const SuperAlgebra badunit({"a", "b"}, {0, 0}, {{0, 0, 0, Rational(1)}}, identity_matrix(2),
                             Mode::GradedInvolution, vec({1, 0}));
  EXPECT_FALSE(find_check(validate(badunit), "unit")->passed);
}

TEST(Validation, StructuralErrorsAtConstruction) {
  EXPECT_THROW(SuperAlgebra({}, {}, {}, {}, Mode::Superinvolution), ValidationError);
  EXPECT_THROW(SuperAlgebra({"a"}, {2}, {}, identity_matrix(1), Mode::Superinvolution), ValidationError);
  EXPECT_THROW(SuperAlgebra({"a"}, {0}, {{0, 0, 3, Rational(1)}}, identity_matrix(1), Mode::Superinvolution),
               ValidationError);
  EXPECT_THROW(SuperAlgebra({"a"}, {0}, {}, identity_matrix(2), Mode::Superinvolution), ValidationError);
}

TEST(Json, FileMatchesGallery) {
  const auto a = load_algebra_file(std::string(SUPERPI_TEST_DATA) + "/grassmann2.json");
  EXPECT_TRUE(validate(a).ok());
  EXPECT_EQ(algebra_to_json(a), algebra_to_json(grassmann2()));
}

TEST(Json, RoundTrip) {
  for (const char* name : {"grassmann2", "grassmann_trunc:3", "matrix_super:1", "matrix:2"}) {
    const auto a = gallery(name);
    const auto text = algebra_to_json(a);
    const auto b = algebra_from_json(text);
    EXPECT_EQ(algebra_to_json(b), text) << name;
    EXPECT_EQ(b.unit(), a.unit());
  }
}

TEST(Json, MalformedInput) {
  EXPECT_THROW(algebra_from_json("{"), ValidationError);
  EXPECT_THROW(algebra_from_json(R"({"dim": 1})"), ValidationError);
  EXPECT_THROW(algebra_from_json(R"({"dim":1,"grading":[0],"mode":"weird","mult":[],"inv":[["1"]]})"),
               ValidationError);
  EXPECT_THROW(algebra_from_json(R"({"dim":1,"grading":[0],"mode":"superinvolution","mult":[[0,0,0]],"inv":[["1"]]})"),
               ValidationError);
  EXPECT_THROW(algebra_from_json(R"({"dim":1,"grading":[0],"mode":"superinvolution","mult":[],"inv":[["1/0"]]})"),
               ValidationError);
  EXPECT_THROW(load_algebra_file("/nonexistent/algebra.json"), std::runtime_error);
  const std::string text = read_file(std::string(SUPERPI_TEST_DATA) + "/grassmann2.json");
  EXPECT_NO_THROW(algebra_from_json(text));
}
