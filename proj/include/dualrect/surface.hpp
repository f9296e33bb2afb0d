#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dualrect/rational.hpp"
#include "dualrect/rectangle.hpp"

namespace dualrect {

/// F(a, b, c) = 2c^2 - abc + 4(a + b).
Rational surface_value(const Rational& a, const Rational& b,
                       const Rational& c);

inline bool on_surface(const Rational& a, const Rational& b,
                       const Rational& c) {
  return surface_value(a, b, c).is_zero();
}

/// Rational point on the cubic surface F(a, b, c) = 0.
class SurfacePoint {
 public:
  /// Throws DomainError(OffSurface) unless F(a, b, c) == 0.
  SurfacePoint(Rational a, Rational b, Rational c);

  /// Parses "a,b,c".
  static SurfacePoint parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  /// "a,b,c"
  std::string str() const;

  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
  friend std::strong_ordering operator<=>(const SurfacePoint& x,
                                          const SurfacePoint& y) {
    if (auto o = x.a_ <=> y.a_; o != 0) return o;
    if (auto o = x.b_ <=> y.b_; o != 0) return o;
    return x.c_ <=> y.c_;
  }

 private:
  Rational a_;
  Rational b_;
  Rational c_;
};

/// (first.long, first.short, second.long).
SurfacePoint lift(const DualPair& pair);

/// max(|numerator|, denominator) over the three coordinates.
Integer height(const SurfacePoint& p);

enum class DegenerateReason { ZeroC, NonPositiveSide, CoincidesWithInput };

std::string_view to_string(DegenerateReason r);

/// Result of recovering d = (ab - 2c)/2 from a surface point.
struct Completion {
  Rational d;
  std::variant<DualPair, DegenerateReason> outcome;

  bool is_valid() const { return std::holds_alternative<DualPair>(outcome); }
  const DualPair& pair() const { return std::get<DualPair>(outcome); }
  DegenerateReason reason() const {
    return std::get<DegenerateReason>(outcome);
  }
  /// "ValidPair" or "Degenerate(<reason>)".
  std::string label() const;
};

/// ValidPair when a, b, c, d > 0; otherwise the first applicable reason,
/// ZeroC before NonPositiveSide.
Completion complete(const SurfacePoint& p);

/// Coefficients of F(theta P1 + (1 - theta) P2) = alpha theta^3 +
/// beta theta^2 + gamma theta (+ F(P2), which is zero on the surface).
struct LineCubic {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational constant;
};

LineCubic line_cubic(const SurfacePoint& p1, const SurfacePoint& p2);

/// Scales to integers, divides by the content and makes the leading
/// coefficient positive. The leading coefficient must be non-zero.
std::array<Integer, 3> primitive_coefficients(const LineCubic& cubic);

/// Point of the line theta P1 + (1 - theta) P2.
std::array<Rational, 3> point_on_line(const SurfacePoint& p1,
                                      const SurfacePoint& p2,
                                      const Rational& theta);

struct ChordResult {
  std::array<Integer, 3> coefficients;  // primitive, alpha > 0
  Rational theta3;
  SurfacePoint third_point;
  Completion classification;
};

/// Third intersection of the line through P1 and P2 with the surface.
/// The restricted cubic has roots 0 and 1, so theta3 = gamma/alpha.
/// Throws DomainError(CoincidentPoints) for P1 == P2 and
/// DomainError(DegenerateLine) when alpha == 0.
ChordResult chord(const SurfacePoint& p1, const SurfacePoint& p2);

struct SurfaceCatalogEntry {
  SurfacePoint point;
  Rational theta3;
  std::pair<SurfacePoint, SurfacePoint> parents;
  Completion classification;
  Integer height;
  int round;
};

enum class RejectReason { HeightExceeded, DegenerateLine, CoincidesWithInput };

std::string_view to_string(RejectReason r);

struct Rejection {
  std::pair<SurfacePoint, SurfacePoint> parents;
  RejectReason reason;
  std::optional<SurfacePoint> point;
  int round;
};

struct IterateReport {
  std::vector<SurfaceCatalogEntry> entries;  // sorted by height, then point
  std::vector<Rejection> rejected;           // in processing order
  int rounds_run = 0;
};

/// Breadth-first chord closure. Round r joins every unordered pair of
/// known points that has at least one point new in round r - 1 (all seeds
/// count as new in round 1); third points not seen before and of height at
/// most `max_height` become known. Stops after `max_steps` rounds or when a
/// round adds nothing. Seeds must be distinct (DomainError Precondition).
IterateReport iterate(const std::vector<SurfacePoint>& seeds, int max_steps,
                      const Integer& max_height);

}  // namespace dualrect
