#include <gtest/gtest.h>

#include "dualrect/errors.hpp"
#include "dualrect/rectangle.hpp"
#include "random_support.hpp"

using namespace dualrect;

namespace {

Errc error_code_of(auto&& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected DomainError";
  return Errc::Precondition;
}

Rectangle R(long l, long s) { return Rectangle(l, s); }

}  // namespace

TEST(Rectangle, SortsSidesLyingDown) {
  EXPECT_EQ(make_rectangle(4, 6), R(6, 4));
  const Rectangle r = make_rectangle(6, 3);
  EXPECT_EQ(r.long_side(), Rational(6));
  EXPECT_EQ(r.short_side(), Rational(3));
  const Rectangle q = make_rectangle(Rational(343, 88), Rational(48, 11));
  EXPECT_EQ(q.long_side(), Rational(48, 11));
  EXPECT_EQ(q.short_side(), Rational(343, 88));
}

TEST(Rectangle, RejectsNonPositiveSides) {
  EXPECT_EQ(error_code_of([] { R(0, 3); }), Errc::NonPositiveSide);
  EXPECT_EQ(error_code_of([] { R(3, -1); }), Errc::NonPositiveSide);
}

TEST(Rectangle, Measures) {
  auto m = measures(R(4, 4));
  EXPECT_EQ(m.area, Rational(16));
  EXPECT_EQ(m.perimeter, Rational(16));
  m = measures(R(6, 3));
  EXPECT_EQ(m.area, Rational(18));
  EXPECT_EQ(m.perimeter, Rational(18));
  m = measures(R(10, 2));
  EXPECT_EQ(m.area, Rational(20));
  EXPECT_EQ(m.perimeter, Rational(24));
}

TEST(Rectangle, IsDual) {
  EXPECT_TRUE(is_dual(R(6, 4), R(10, 2)));
  EXPECT_TRUE(is_dual(R(4, 4), R(4, 4)));
  EXPECT_FALSE(is_dual(R(5, 5), R(5, 5)));
  EXPECT_FALSE(is_dual(R(6, 4), R(10, 3)));
}

TEST(Rectangle, IsSelfDual) {
  EXPECT_TRUE(is_self_dual(R(4, 4)));
  EXPECT_TRUE(is_self_dual(R(6, 3)));
  EXPECT_TRUE(is_self_dual(Rectangle(10, Rational(5, 2))));
  EXPECT_FALSE(is_self_dual(R(6, 4)));
}

TEST(DualPair, CanonicalOrder) {
  EXPECT_EQ(canonicalize_pair(R(10, 2), R(6, 4)).str(), "(6,4)(10,2)");
  EXPECT_EQ(canonicalize_pair(R(6, 3), R(6, 3)).str(), "(6,3)(6,3)");
  EXPECT_EQ(canonicalize_pair(R(54, 1), R(22, 5)).str(), "(22,5)(54,1)");
  EXPECT_EQ(canonicalize_pair(R(10, 2), R(6, 4)),
            canonicalize_pair(R(6, 4), R(10, 2)));
}

TEST(DualPair, RejectsNonDualRectangles) {
  EXPECT_EQ(error_code_of([] { canonicalize_pair(R(5, 5), R(5, 5)); }),
            Errc::NotDual);
}

TEST(SolvePartner, TheoremOnePairs) {
  EXPECT_EQ(solve_partner(4, 2).str(), "(6,4)(10,2)");
  EXPECT_EQ(solve_partner(5, 1).str(), "(22,5)(54,1)");
  EXPECT_EQ(solve_partner(3, 3).str(), "(6,3)(6,3)");
  EXPECT_EQ(solve_partner(2, 4).str(), "(6,4)(10,2)");
}

TEST(SolvePartner, ReproducesEveryTheoremOnePair) {
  const std::vector<std::pair<Rectangle, Rectangle>> pairs = {
      {R(4, 4), R(4, 4)},   {R(6, 3), R(6, 3)},   {R(6, 4), R(10, 2)},
      {R(10, 3), R(13, 2)}, {R(10, 7), R(34, 1)}, {R(13, 6), R(38, 1)},
      {R(22, 5), R(54, 1)}};
  for (const auto& [r1, r2] : pairs) {
    const DualPair expected(r1, r2);
    EXPECT_EQ(solve_partner(r1.short_side(), r2.short_side()), expected);
    EXPECT_EQ(solve_partner(r2.short_side(), r1.short_side()), expected);
  }
}

TEST(SolvePartner, ThreeIntegralExamples) {
  EXPECT_EQ(solve_partner(3, Rational(5, 2)).str(), "(7,3)(8,5/2)");
  EXPECT_EQ(solve_partner(1, Rational(9, 2)).str(), "(40,9/2)(89,1)");
}

TEST(SolvePartner, ErrorCases) {
  EXPECT_EQ(error_code_of([] { solve_partner(2, 2); }), Errc::Inconsistent);
  EXPECT_EQ(error_code_of([] { solve_partner(1, 4); }), Errc::Inconsistent);
  EXPECT_EQ(error_code_of([] { solve_partner(8, Rational(1, 2)); }),
            Errc::Inconsistent);
  // a = (2 + 4)/(1 - 4) = -2.
  EXPECT_EQ(error_code_of([] { solve_partner(1, 1); }),
            Errc::NoPositiveSolution);
  EXPECT_EQ(error_code_of([] { solve_partner(0, 5); }), Errc::NonPositiveSide);
  EXPECT_EQ(error_code_of([] { solve_partner(5, -1); }),
            Errc::NonPositiveSide);
}

TEST(SolvePartnerProperty, RandomInputsAboveHyperbolaGiveDualPairs) {
  test_support::RationalGen gen(21, 1000);
  int checked = 0;
  while (checked < 1000) {
    const Rational b = gen.positive(), d = gen.positive();
    if (b * d <= 4) {
      if (b * d < 4) {
        EXPECT_THROW(solve_partner(b, d), DomainError);
      }
      continue;
    }
    const DualPair p = solve_partner(b, d);
    EXPECT_TRUE(is_dual(p.first(), p.second()));
    EXPECT_LE(p.first(), p.second());
    ++checked;
  }
}

TEST(RectangleProperty, DualityIsSymmetricAndSelfDualityAgrees) {
  test_support::RationalGen gen(22, 50);
  for (int i = 0; i < 1000; ++i) {
    const Rectangle r1(gen.positive(), gen.positive());
    const Rectangle r2(gen.positive(), gen.positive());
    EXPECT_EQ(is_dual(r1, r2), is_dual(r2, r1));
    const bool hyperbola =
        (r1.long_side() - 2) * (r1.short_side() - 2) == Rational(4);
    EXPECT_EQ(is_self_dual(r1), is_dual(r1, r1));
    EXPECT_EQ(is_self_dual(r1), hyperbola);
  }
  // Same agreement on rectangles that really are self-dual.
  for (int i = 0; i < 200; ++i) {
    const Rational x = 2 + gen.positive();
    const Rectangle r(x, 2 * x / (x - 2));
    EXPECT_TRUE(is_self_dual(r));
    EXPECT_TRUE(is_dual(r, r));
    EXPECT_EQ((r.long_side() - 2) * (r.short_side() - 2), Rational(4));
  }
}
