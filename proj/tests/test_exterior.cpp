#include "okh/checks.hpp"
#include "okh/exterior.hpp"

#include <gtest/gtest.h>

using namespace okh;

namespace {

ExtElement x(int n, int i) { return ExtElement::variable(n, i); }
ExtElement w(int n, Word word, Rational c = 1) { return ExtElement::word(n, word, c); }

}  // namespace

TEST(Number, RationalRoundTrip) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(to_string(Rational(-1, 2)), "-1/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Number, ExtendedGcd) {
  const Bezout b = extended_gcd(Integer(12), Integer(-18));
  EXPECT_EQ(b.g, 6);
  EXPECT_EQ(b.s * 12 + b.t * -18, 6);
  EXPECT_EQ(mod_floor(Integer(-7), Integer(3)), 2);
}

TEST(Exterior, WedgeExamples) {
  EXPECT_EQ(wedge(x(2, 1), x(2, 0)), w(2, 0b11, -1));
  EXPECT_TRUE(wedge(x(2, 0), x(2, 0)).is_zero());
  EXPECT_EQ(wedge(x(2, 0) + x(2, 1), x(2, 0) - x(2, 1)), w(2, 0b11, -2));
}

TEST(Exterior, ContractExamples) {
  EXPECT_EQ(contract(0, w(3, 0b011)), x(3, 1));
  EXPECT_EQ(contract(1, w(3, 0b011)), Rational(-1) * x(3, 0));
  EXPECT_TRUE(contract(2, w(3, 0b011)).is_zero());
}

TEST(Exterior, ActionExamples) {
  RepData rep{0, {1, 0}};
  EXPECT_EQ(act(Generator::F, rep, w(2, 0)), x(2, 0));
  EXPECT_EQ(act(Generator::E, rep, w(2, 0b11)), x(2, 1) - x(2, 0));
  RepData half{Rational(1, 2), {0, 0}};
  EXPECT_EQ(act(Generator::H2, half, x(2, 0)), Rational(3, 2) * x(2, 0));
  EXPECT_THROW(act(Generator::H1, half, w(2, 0) + x(2, 0)), std::invalid_argument);
}

TEST(Exterior, MergeExamples) {
  const std::vector<int> target{0, 0};
  EXPECT_EQ(merge_map(target, 1, x(2, 0)), x(1, 0));
  EXPECT_TRUE(merge_map(target, 1, w(2, 0b11)).is_zero());
  EXPECT_EQ(merge_map(target, 1, w(2, 0)), w(1, 0));
}

TEST(Exterior, SplitExamples) {
  const std::vector<int> target{0};
  EXPECT_EQ(split_map(target, 2, 0, 1, w(1, 0)), x(2, 0) - x(2, 1));
  // (x0 - x1) ^ x0 = -x1 ^ x0 = x0 ^ x1
  EXPECT_EQ(split_map(target, 2, 0, 1, x(1, 0)), w(2, 0b11));
  // Independent of which output circle the source variable is sent to.
  const std::vector<int> other{1};
  for (Word v : {Word{0}, Word{1}}) {
    EXPECT_EQ(split_map(target, 2, 0, 1, w(1, v)), split_map(other, 2, 0, 1, w(1, v)));
  }
}

TEST(Exterior, MatrixFormsAgreeWithElements) {
  const std::vector<int> target{0, 1, 0};
  const IntMatrix m = substitution_matrix(target, 2);
  for (Word v = 0; v < 8; ++v) {
    const ExtElement img = substitute(target, 2, w(3, v));
    for (Word u = 0; u < 4; ++u) EXPECT_EQ(Rational(m.at(u, v)), img.coefficient(u));
  }
  const IntMatrix e = contraction_sum_matrix(3);
  RepData rep{0, {0, 0, 0}};
  for (Word v = 0; v < 8; ++v) {
    const ExtElement img = act(Generator::E, rep, w(3, v));
    for (Word u = 0; u < 8; ++u) EXPECT_EQ(Rational(e.at(u, v)), img.coefficient(u));
  }
}

class ExteriorIdentities : public ::testing::TestWithParam<int> {};

TEST_P(ExteriorIdentities, InnerProduct) {
  for (const auto& r : inner_product_checks(GetParam())) EXPECT_TRUE(r.ok) << r.name << ": " << r.detail;
}

TEST_P(ExteriorIdentities, Gl11Relations) {
  const int n = GetParam();
  RepData rep{Rational(-7, 3), {}};
  for (int j = 0; j < n; ++j) rep.z.push_back(Rational(j * j - 3, j + 2));
  for (const auto& r : gl11_checks(rep)) EXPECT_TRUE(r.ok) << r.name << ": " << r.detail;
}

INSTANTIATE_TEST_SUITE_P(Circles, ExteriorIdentities, ::testing::Range(0, 6));

TEST(Exterior, MergeIntertwinesAction) {
  // z on the source restricts to z' on the target.
  const std::vector<int> target{0, 0, 1};
  RepData src{Rational(1, 3), {Rational(1, 2), Rational(1, 4), 2}};
  RepData dst{Rational(1, 3), {Rational(3, 4), 2}};
  for (Word v = 0; v < 8; ++v) {
    const ExtElement a = w(3, v);
    for (auto g : {Generator::E, Generator::F, Generator::H1, Generator::H2}) {
      EXPECT_EQ(merge_map(target, 2, act(g, src, a)), act(g, dst, merge_map(target, 2, a)));
    }
  }
}

TEST(Exterior, SplitAnticommutesWithOddGenerators) {
  const std::vector<int> target{0, 2};
  RepData src{1, {Rational(1, 2), 3}};
  RepData dst{0, {Rational(1, 5), Rational(3, 10), 3}};
  for (Word v = 0; v < 4; ++v) {
    const ExtElement a = w(2, v);
    for (auto g : {Generator::E, Generator::F}) {
      EXPECT_EQ(split_map(target, 3, 0, 1, act(g, src, a)),
                Rational(-1) * act(g, dst, split_map(target, 3, 0, 1, a)));
    }
    for (auto g : {Generator::H1, Generator::H2}) {
      EXPECT_EQ(split_map(target, 3, 0, 1, act(g, src, a)), act(g, dst, split_map(target, 3, 0, 1, a)));
    }
  }
}
