#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dualrect/errors.hpp"
#include "dualrect/integral.hpp"

using namespace dualrect;

namespace {

Rectangle R(long l, long s) { return Rectangle(l, s); }
DualPair P(long a, long b, long c, long d) { return DualPair(R(a, b), R(c, d)); }

std::vector<std::string> strs(const std::vector<DualPair>& pairs) {
  std::vector<std::string> out;
  for (const auto& p : pairs) out.push_back(p.str());
  return out;
}

// GMP's own square root, independent of the Newton iteration under test.
std::optional<Integer> gmp_sqrt_if_square(const Integer& n) {
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

TEST(IntegerSqrt, Examples) {
  EXPECT_EQ(integer_sqrt_if_square(256), Integer(16));
  EXPECT_EQ(integer_sqrt_if_square(305), std::nullopt);
  EXPECT_EQ(integer_sqrt_if_square(0), Integer(0));
  EXPECT_EQ(integer_sqrt_if_square(1), Integer(1));
  EXPECT_EQ(integer_sqrt_if_square(2), std::nullopt);
}

TEST(IntegerSqrt, NegativeInputThrows) {
  try {
    integer_sqrt_if_square(-1);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), Errc::NegativeInput);
  }
}

TEST(IntegerSqrt, ExhaustiveSmallRange) {
  for (long n = 0; n < 100000; ++n) {
    ASSERT_EQ(integer_sqrt_if_square(n), gmp_sqrt_if_square(n)) << n;
  }
}

TEST(IntegerSqrt, LargeValuesAroundSquares) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    Integer r = rng();
    r = r * Integer(rng()) * Integer(rng()) + i;  // ~190 bits
    const Integer sq = r * r;
    EXPECT_EQ(isqrt(sq), r);
    EXPECT_EQ(isqrt(sq - 1), r - 1);
    EXPECT_EQ(isqrt(sq + 2 * r), r);
    EXPECT_EQ(integer_sqrt_if_square(sq), r);
    EXPECT_EQ(integer_sqrt_if_square(sq + 1), std::nullopt);
    EXPECT_EQ(integer_sqrt_if_square(sq - 1), std::nullopt);
  }
}

TEST(Partner, TheoremOneAndExerciseExamples) {
  auto w = partner_of_integer_rectangle(6, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->discriminant, 256);
  EXPECT_EQ(w->t, 16);
  EXPECT_EQ(w->c, Rational(10));
  EXPECT_EQ(w->d, Rational(2));

  w = partner_of_integer_rectangle(10, 7);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->t, 66);
  EXPECT_EQ(w->c, Rational(34));
  EXPECT_EQ(w->d, Rational(1));

  w = partner_of_integer_rectangle(7, 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->t, 11);
  EXPECT_EQ(w->c, Rational(8));
  EXPECT_EQ(w->d, Rational(5, 2));

  EXPECT_FALSE(partner_of_integer_rectangle(5, 5));
}

TEST(Partner, NegativeDiscriminantHasNoPartner) {
  // 1 - 64 < 0.
  EXPECT_FALSE(partner_of_integer_rectangle(1, 1));
}

TEST(Partner, PreconditionViolations) {
  EXPECT_THROW(partner_of_integer_rectangle(3, 4), DomainError);
  EXPECT_THROW(partner_of_integer_rectangle(3, 0), DomainError);
}

TEST(Partner, WitnessInvariantsAndAgreementWithSolver) {
  int found = 0;
  for (long a = 1; a <= 400; ++a) {
    for (long b = 1; b <= std::min(a, kShortSideBound); ++b) {
      const auto w = partner_of_integer_rectangle(a, b);
      if (!w) continue;
      ++found;
      const Integer ab = w->a * w->b;
      EXPECT_EQ(w->discriminant, ab * ab - 32 * (w->a + w->b));
      EXPECT_EQ(w->t * w->t, w->discriminant);
      EXPECT_GE(w->t, 0);
      EXPECT_EQ(w->c * w->d, Rational(2 * (a + b)));
      EXPECT_EQ(2 * w->c + 2 * w->d, Rational(ab));
      EXPECT_TRUE(is_dual(R(a, b), Rectangle(w->c, w->d)));
      if (Rational(b) * w->d != 4) {
        EXPECT_EQ(solve_partner(b, w->d), w->pair());
      }
      // k = ab - t is the substitution variable of the exercise search.
      const Integer k = ab - w->t;
      EXPECT_GT(2 * b * k, 32);
      EXPECT_LE(b * k * k - 32 * k - 32 * b * b, 0);
    }
  }
  EXPECT_GT(found, 7);
}

TEST(EnumerateIntegral, SevenPairs) {
  EXPECT_EQ(strs(enumerate_integral()),
            (std::vector<std::string>{"(4,4)(4,4)", "(6,3)(6,3)",
                                      "(6,4)(10,2)", "(10,3)(13,2)",
                                      "(10,7)(34,1)", "(13,6)(38,1)",
                                      "(22,5)(54,1)"}));
}

TEST(EnumerateIntegral, SmallBounds) {
  EXPECT_EQ(strs(enumerate_integral(4)),
            (std::vector<std::string>{"(4,4)(4,4)", "(6,3)(6,3)",
                                      "(6,4)(10,2)", "(10,3)(13,2)"}));
  EXPECT_TRUE(enumerate_integral(1).empty());
}

TEST(EnumerateIntegral, SmallBoundsMatchOracle) {
  const auto oracle = brute_force_oracle(100);
  for (long bound : {1, 2, 3, 4, 5, 6, 7, 10, 64, 100}) {
    std::vector<DualPair> expected;
    for (const auto& e : oracle) {
      if (e.integral_sides == 4 && e.pair.first().short_side() <= bound &&
          e.pair.second().short_side() <= bound) {
        expected.push_back(e.pair);
      }
    }
    EXPECT_EQ(enumerate_integral(bound), expected) << "bound " << bound;
  }
}

TEST(EnumerateThreeIntegral, ContainsExerciseExamples) {
  const auto rows = enumerate_three_integral();
  std::set<DualPair> pairs;
  for (const auto& e : rows) {
    pairs.insert(e.pair);
    EXPECT_GE(e.integral_sides, 3);
    EXPECT_EQ(e.integral_sides, e.pair.integral_sides());
    EXPECT_EQ(e.provenance, Provenance::Enumerated);
  }
  EXPECT_TRUE(pairs.contains(DualPair(R(7, 3), Rectangle(8, Rational(5, 2)))));
  EXPECT_TRUE(pairs.contains(DualPair(R(7, 5), Rectangle(16, Rational(3, 2)))));
  EXPECT_TRUE(pairs.contains(DualPair(R(33, 3), Rectangle(48, Rational(3, 2)))));
  EXPECT_TRUE(pairs.contains(DualPair(R(89, 1), Rectangle(40, Rational(9, 2)))));
}

// Frozen from an exact brute-force scan over integer rectangles with
// a < 5000 and b <= 200 (wider than the b <= 64 bound the search relies on).
TEST(EnumerateThreeIntegral, CompleteList) {
  std::vector<std::string> got;
  for (const auto& e : enumerate_three_integral()) {
    got.push_back(e.pair.str() + " " + std::to_string(e.integral_sides));
  }
  EXPECT_EQ(got, (std::vector<std::string>{
                     "(4,4)(4,4) 4",      "(6,3)(6,3) 4",
                     "(6,4)(10,2) 4",     "(7,3)(8,5/2) 3",
                     "(7,5)(16,3/2) 3",   "(17/2,8)(33,1) 3",
                     "(10,3)(13,2) 4",    "(10,7)(34,1) 4",
                     "(13,6)(38,1) 4",    "(16,11/2)(43,1) 3",
                     "(21,13)(136,1/2) 3", "(22,5)(54,1) 4",
                     "(33,3)(48,3/2) 3",  "(40,9/2)(89,1) 3",
                     "(73,9)(328,1/2) 3"}));
}

TEST(EnumerateThreeIntegral, FourIntegralEntriesAreTheoremOne) {
  std::vector<DualPair> four;
  for (const auto& e : enumerate_three_integral()) {
    if (e.integral_sides == 4) four.push_back(e.pair);
  }
  EXPECT_EQ(four, enumerate_integral());
}

TEST(EnumerateThreeIntegral, SortedAndUnique) {
  const auto rows = enumerate_three_integral();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(rows[i - 1].pair, rows[i].pair);
  }
}

TEST(EnumerateThreeIntegral, MatchesOracleUpToLongSide200) {
  std::vector<DualPair> expected;
  for (const auto& e : brute_force_oracle(200)) {
    if (e.integral_sides >= 3) expected.push_back(e.pair);
  }
  std::vector<DualPair> actual;
  for (const auto& e : enumerate_three_integral()) {
    if (*integral_reach(e.pair) <= 200) actual.push_back(e.pair);
  }
  EXPECT_EQ(actual, expected);
}

TEST(Oracle, Bounds) {
  const auto has = [](const std::vector<CatalogEntry>& rows,
                      const DualPair& p) {
    return std::any_of(rows.begin(), rows.end(),
                       [&](const CatalogEntry& e) { return e.pair == p; });
  };
  const auto at22 = brute_force_oracle(22);
  for (const DualPair& p : enumerate_integral()) EXPECT_TRUE(has(at22, p));

  const auto at5 = brute_force_oracle(5);
  EXPECT_TRUE(has(at5, P(4, 4, 4, 4)));
  EXPECT_FALSE(has(at5, P(6, 3, 6, 3)));

  const auto at89 = brute_force_oracle(89);
  const DualPair big(R(89, 1), Rectangle(40, Rational(9, 2)));
  EXPECT_TRUE(has(at89, big));
  EXPECT_FALSE(has(brute_force_oracle(88), big));
  for (const auto& e : at89) {
    EXPECT_EQ(e.provenance, Provenance::Oracle);
    EXPECT_TRUE(is_dual(e.pair.first(), e.pair.second()));
  }
}

TEST(IntegralReach, PicksSmallestFullyIntegralRectangle) {
  EXPECT_EQ(integral_reach(P(22, 5, 54, 1)), Rational(22));
  EXPECT_EQ(integral_reach(DualPair(R(89, 1), Rectangle(40, Rational(9, 2)))),
            Rational(89));
}
