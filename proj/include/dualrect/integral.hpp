#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dualrect/rational.hpp"
#include "dualrect/rectangle.hpp"

namespace dualrect {

/// Largest short side an integral-sided rectangle with a dual partner can
/// have: (ab + t)(ab - t) = 32(a + b) with ab - t >= 1 forces ab <= 64a.
inline constexpr long kShortSideBound = 64;

/// Exact integer square root by Newton iteration: floor(sqrt(n)).
/// Throws DomainError(NegativeInput) for n < 0.
Integer isqrt(const Integer& n);

/// t with t*t == n, or nullopt when n is not a perfect square.
std::optional<Integer> integer_sqrt_if_square(const Integer& n);

/// Certificate that the integer rectangle (a, b) has a rational dual partner
/// (c, d): the discriminant a^2 b^2 - 32(a + b) equals t^2 and
/// c = (ab + t)/4, d = (ab - t)/4 are the roots of 2x^2 - ab x + 4(a + b).
struct PartnerWitness {
  Integer a;
  Integer b;
  Integer discriminant;
  Integer t;
  Rational c;
  Rational d;

  DualPair pair() const;
};

/// Requires a >= b >= 1 (DomainError Precondition otherwise).
std::optional<PartnerWitness> partner_of_integer_rectangle(const Integer& a,
                                                           const Integer& b);

enum class Provenance { Enumerated, Oracle, Chord };

std::string_view to_string(Provenance p);

struct CatalogEntry {
  DualPair pair;
  int integral_sides;
  Provenance provenance;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

CatalogEntry make_entry(const DualPair& pair, Provenance provenance);

/// All dual pairs with four integral sides whose short sides are both in
/// [1, bound], found by running solve_partner over every (b, d) with bd != 4.
/// Sorted ascending, no duplicates.
std::vector<DualPair> enumerate_integral(long bound = kShortSideBound);

/// All dual pairs with at least three integral sides, via the substitution
/// k = ab - t = 4d which turns (ab + t)(ab - t) = 32(a + b) into
///
///   a = (32b + k^2) / (2bk - 32),   c = (2ab - k)/4,   d = k/4.
///
/// Sorted ascending by pair, no duplicates.
std::vector<CatalogEntry> enumerate_three_integral();

/// Independent check of the two enumerations above: scans every integer
/// rectangle with b <= min(a, 64) and a <= a_max, asks
/// partner_of_integer_rectangle for its partner, and reports each resulting
/// pair once. Sorted ascending.
std::vector<CatalogEntry> brute_force_oracle(long a_max);

/// Smallest long side among the pair's fully integral rectangles, or
/// nullopt if neither rectangle has two integer sides. This is the long
/// side the oracle must reach to discover the pair.
std::optional<Rational> integral_reach(const DualPair& pair);

}  // namespace dualrect
