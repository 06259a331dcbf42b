#include "superpi/errors.hpp"
#include "superpi/freealg.hpp"

#include <gtest/gtest.h>

using namespace superpi;

namespace {

constexpr Mode kSuper = Mode::Superinvolution;

SuperPolynomial var(VarType t, int i) { return SuperPolynomial::variable({t, i}, kSuper); }

void expect_error(std::string_view text, ParseError::Kind kind, std::size_t position) {
  try {
    parse(text, kSuper);
    ADD_FAILURE() << "no error for '" << text << "'";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), kind) << text << ": " << e.what();
    EXPECT_EQ(e.position(), position) << text << ": " << e.what();
  }
}

} // namespace

TEST(Parser, StandardPolynomial) {
  EXPECT_EQ(parse("y0_1*y0_2 - y0_2*y0_1", kSuper), standard_poly(2, VarType::Y0, kSuper));
}

TEST(Parser, ParenthesizedGenerator) {
  EXPECT_EQ(parse("(z1_1*z1_2 + z1_2*z1_1)", kSuper),
            var(VarType::Z1, 1) * var(VarType::Z1, 2) + var(VarType::Z1, 2) * var(VarType::Z1, 1));
}

TEST(Parser, RationalCoefficients) {
  const auto f = parse("3/2*y0_1", kSuper);
  EXPECT_EQ(f.coefficient({{VarType::Y0, 1}}), Rational(3, 2));
  EXPECT_EQ(f.size(), 1u);
  EXPECT_EQ(parse("-4/6*z0_2", kSuper).coefficient({{VarType::Z0, 2}}), Rational(-2, 3));
}

TEST(Parser, DistributesProductsOfSums) {
  const auto f = parse("(y0_1 + z0_1)*(y1_1 - 2*z1_1)", kSuper);
  const auto g = (var(VarType::Y0, 1) + var(VarType::Z0, 1)) * (var(VarType::Y1, 1) - var(VarType::Z1, 1) * Rational(2));
  EXPECT_EQ(f, g);
}

TEST(Parser, SharpPostfix) {
  EXPECT_EQ(parse("(z1_1*z1_2)^#", kSuper), -(var(VarType::Z1, 2) * var(VarType::Z1, 1)));
  EXPECT_EQ(parse("z0_1^#^#", kSuper), var(VarType::Z0, 1));
}

TEST(Parser, CancellationYieldsZero) {
  EXPECT_TRUE(parse("y0_1*y0_2 - y0_1*y0_2", kSuper).is_zero());
}

TEST(Parser, ErrorsCarryKindAndPosition) {
  expect_error("y0_1 + $", ParseError::Kind::Lexical, 7);
  expect_error("y0_1 ^ 2", ParseError::Kind::Lexical, 5);
  expect_error("(y0_1 + y0_2", ParseError::Kind::UnbalancedParens, 0);
  expect_error("y0_1)", ParseError::Kind::UnbalancedParens, 4);
  expect_error("x_1", ParseError::Kind::UnknownVariable, 0);
  expect_error("y2_1", ParseError::Kind::UnknownVariable, 0);
  expect_error("1/0*y0_1", ParseError::Kind::MalformedRational, 0);
  expect_error("3/*y0_1", ParseError::Kind::MalformedRational, 0);
  expect_error("", ParseError::Kind::Syntax, 0);
  expect_error("y0_1 y0_2", ParseError::Kind::Syntax, 5);
  expect_error("y0_1 +", ParseError::Kind::Syntax, 6);
}

TEST(Parser, RejectsBareScalars) {
  EXPECT_THROW(parse("3", kSuper), ParseError);
  EXPECT_THROW(parse("y0_1 + 2", kSuper), ParseError);
}
