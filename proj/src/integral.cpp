#include "dualrect/integral.hpp"

#include <algorithm>
#include <set>

#include "dualrect/errors.hpp"

namespace dualrect {

Integer isqrt(const Integer& n) {
  if (n < 0) {
    throw DomainError(Errc::NegativeInput,
                      "square root of negative integer " + n.get_str());
  }
  if (n < 2) return n;
  // Start above the root; Newton's iterates then decrease monotonically
  // until they reach floor(sqrt(n)).
  Integer x = Integer(1) << (mpz_sizeinbase(n.get_mpz_t(), 2) / 2 + 1);
  for (;;) {
    Integer y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

std::optional<Integer> integer_sqrt_if_square(const Integer& n) {
  Integer root = isqrt(n);
  if (root * root == n) return root;
  return std::nullopt;
}

DualPair PartnerWitness::pair() const {
  return DualPair(Rectangle(Rational(a), Rational(b)), Rectangle(c, d));
}

std::optional<PartnerWitness> partner_of_integer_rectangle(const Integer& a,
                                                           const Integer& b) {
  if (b < 1 || a < b) {
    throw DomainError(Errc::Precondition,
                      "partner requires a >= b >= 1, got a=" + a.get_str() +
                          " b=" + b.get_str());
  }
  const Integer ab = a * b;
  Integer disc = ab * ab - 32 * (a + b);
  if (disc < 0) return std::nullopt;
  auto t = integer_sqrt_if_square(disc);
  if (!t) return std::nullopt;
  if (ab - *t <= 0) return std::nullopt;
  Rational c(Integer(ab + *t), Integer(4));
  Rational d(Integer(ab - *t), Integer(4));
  return PartnerWitness{a, b, std::move(disc), std::move(*t), std::move(c),
                        std::move(d)};
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Enumerated: return "enumerated";
    case Provenance::Oracle: return "oracle";
    case Provenance::Chord: return "chord";
  }
  return "unknown";
}

CatalogEntry make_entry(const DualPair& pair, Provenance provenance) {
  return CatalogEntry{pair, pair.integral_sides(), provenance};
}

std::vector<DualPair> enumerate_integral(long bound) {
  std::set<DualPair> found;
  for (long b = 1; b <= bound; ++b) {
    for (long d = 1; d <= bound; ++d) {
      // bd = 4 is inconsistent and bd < 4 has no positive solution.
      if (b * d <= 4) continue;
      DualPair pair = solve_partner(Rational(b), Rational(d));
      if (pair.integral_sides() == 4) found.insert(std::move(pair));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<CatalogEntry> enumerate_three_integral() {
  // With three integral sides one rectangle (a, b) is fully integral, so
  // b <= 64. For each b, k = 4d ranges over integers with 2bk > 32 (a > 0)
  // and bk^2 - 32k - 32b^2 <= 0 (t = ab - k >= 0).
  std::set<DualPair> found;
  for (long b = 1; b <= kShortSideBound; ++b) {
    const Integer bz(b);
    for (long k = 32 / (2 * b) + 1;; ++k) {
      const Integer kz(k);
      if (bz * kz * kz - 32 * kz - 32 * bz * bz > 0) break;
      const Integer den = 2 * bz * kz - 32;
      const Integer num = 32 * bz + kz * kz;
      if (num % den != 0) continue;
      const Integer a = num / den;
      if (a < bz) continue;
      const Rational c(Integer(2 * a * bz - kz), Integer(4));
      const Rational d(kz, Integer(4));
      DualPair pair(Rectangle(Rational(a), Rational(bz)), Rectangle(c, d));
      if (pair.integral_sides() >= 3) found.insert(std::move(pair));
    }
  }
  std::vector<CatalogEntry> out;
  out.reserve(found.size());
  for (const DualPair& p : found) {
    out.push_back(make_entry(p, Provenance::Enumerated));
  }
  return out;
}

std::vector<CatalogEntry> brute_force_oracle(long a_max) {
  std::set<DualPair> found;
  for (long a = 1; a <= a_max; ++a) {
    const long b_max = std::min(a, kShortSideBound);
    for (long b = 1; b <= b_max; ++b) {
      if (auto w = partner_of_integer_rectangle(Integer(a), Integer(b))) {
        found.insert(w->pair());
      }
    }
  }
  std::vector<CatalogEntry> out;
  out.reserve(found.size());
  for (const DualPair& p : found) {
    out.push_back(make_entry(p, Provenance::Oracle));
  }
  return out;
}

std::optional<Rational> integral_reach(const DualPair& pair) {
  std::optional<Rational> reach;
  for (const Rectangle* r : {&pair.first(), &pair.second()}) {
    if (r->integral_sides() == 2 && (!reach || r->long_side() < *reach)) {
      reach = r->long_side();
    }
  }
  return reach;
}

}  // namespace dualrect
