#include "dualrect/surface.hpp"

#include <algorithm>
#include <set>

#include "dualrect/errors.hpp"

namespace dualrect {

Rational surface_value(const Rational& a, const Rational& b,
                       const Rational& c) {
  return 2 * c * c - a * b * c + 4 * (a + b);
}

SurfacePoint::SurfacePoint(Rational a, Rational b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (!on_surface(a_, b_, c_)) {
    throw DomainError(Errc::OffSurface,
                      "(" + str() + ") is not on 2c^2 - abc + 4(a+b) = 0");
  }
}

SurfacePoint SurfacePoint::parse(std::string_view text) {
  std::array<Rational, 3> coords;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    const bool last = i == 2;
    if (last != (comma == std::string_view::npos)) {
      throw DomainError(Errc::Parse, "expected a,b,c but got '" +
                                         std::string(text) + "'");
    }
    coords[i] = Rational::parse(text.substr(start, comma - start));
    start = comma + 1;
  }
  return SurfacePoint(coords[0], coords[1], coords[2]);
}

std::string SurfacePoint::str() const {
  return a_.str() + "," + b_.str() + "," + c_.str();
}

SurfacePoint lift(const DualPair& pair) {
  return SurfacePoint(pair.first().long_side(), pair.first().short_side(),
                      pair.second().long_side());
}

Integer height(const SurfacePoint& p) {
  Integer h = 0;
  for (const Rational* x : {&p.a(), &p.b(), &p.c()}) {
    h = std::max(h, Integer(::abs(x->raw().get_num())));
    h = std::max(h, Integer(x->raw().get_den()));
  }
  return h;
}

std::string_view to_string(DegenerateReason r) {
  switch (r) {
    case DegenerateReason::ZeroC: return "ZeroC";
    case DegenerateReason::NonPositiveSide: return "NonPositiveSide";
    case DegenerateReason::CoincidesWithInput: return "CoincidesWithInput";
  }
  return "Unknown";
}

std::string Completion::label() const {
  if (is_valid()) return "ValidPair";
  return "Degenerate(" + std::string(to_string(reason())) + ")";
}

Completion complete(const SurfacePoint& p) {
  // ab = 2c + 2d fixes d; on the surface cd = 2a + 2b then holds as well.
  Rational d = (p.a() * p.b() - 2 * p.c()) / 2;
  if (p.c().is_zero()) return {std::move(d), DegenerateReason::ZeroC};
  if (!p.a().is_positive() || !p.b().is_positive() || !p.c().is_positive() ||
      !d.is_positive()) {
    return {std::move(d), DegenerateReason::NonPositiveSide};
  }
  DualPair pair(Rectangle(p.a(), p.b()), Rectangle(p.c(), d));
  return {std::move(d), std::move(pair)};
}

LineCubic line_cubic(const SurfacePoint& p1, const SurfacePoint& p2) {
  // Base point P2, direction D = P1 - P2: (a, b, c) = P2 + theta D.
  const Rational& a0 = p2.a();
  const Rational& b0 = p2.b();
  const Rational& c0 = p2.c();
  const Rational da = p1.a() - a0;
  const Rational db = p1.b() - b0;
  const Rational dc = p1.c() - c0;

  LineCubic out;
  out.alpha = -(da * db * dc);
  out.beta = 2 * dc * dc - (da * db * c0 + da * b0 * dc + a0 * db * dc);
  out.gamma = 4 * c0 * dc - (da * b0 * c0 + a0 * db * c0 + a0 * b0 * dc) +
              4 * (da + db);
  out.constant = surface_value(a0, b0, c0);
  return out;
}

std::array<Integer, 3> primitive_coefficients(const LineCubic& cubic) {
  const Rational scale(common_denominator({cubic.alpha, cubic.beta,
                                           cubic.gamma}));
  std::array<Integer, 3> coeffs;
  const std::array<const Rational*, 3> src{&cubic.alpha, &cubic.beta,
                                           &cubic.gamma};
  Integer content = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    coeffs[i] = (*src[i] * scale).numerator();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), coeffs[i].get_mpz_t());
  }
  if (content == 0) {
    throw DomainError(Errc::DegenerateLine, "line lies in the surface");
  }
  if (coeffs[0] < 0) content = -content;
  for (Integer& c : coeffs) c /= content;
  return coeffs;
}

std::array<Rational, 3> point_on_line(const SurfacePoint& p1,
                                      const SurfacePoint& p2,
                                      const Rational& theta) {
  const Rational rest = 1 - theta;
  return {theta * p1.a() + rest * p2.a(), theta * p1.b() + rest * p2.b(),
          theta * p1.c() + rest * p2.c()};
}

ChordResult chord(const SurfacePoint& p1, const SurfacePoint& p2) {
  if (p1 == p2) {
    throw DomainError(Errc::CoincidentPoints,
                      "chord needs two distinct points, got (" + p1.str() +
                          ") twice");
  }
  const LineCubic cubic = line_cubic(p1, p2);
  if (cubic.alpha.is_zero()) {
    throw DomainError(Errc::DegenerateLine,
                      "line through (" + p1.str() + ") and (" + p2.str() +
                          ") meets the surface in fewer than three points");
  }
  const auto coeffs = primitive_coefficients(cubic);
  // Roots 0, 1, theta3: alpha theta (theta - 1)(theta - theta3).
  Rational theta3(coeffs[2], coeffs[0]);
  auto xyz = point_on_line(p1, p2, theta3);
  SurfacePoint third(std::move(xyz[0]), std::move(xyz[1]), std::move(xyz[2]));
  Completion cls = complete(third);
  if (theta3.is_zero() || theta3 == 1) {
    cls.outcome = DegenerateReason::CoincidesWithInput;
  }
  return ChordResult{coeffs, std::move(theta3), std::move(third),
                     std::move(cls)};
}

std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::HeightExceeded: return "HeightExceeded";
    case RejectReason::DegenerateLine: return "DegenerateLine";
    case RejectReason::CoincidesWithInput: return "CoincidesWithInput";
  }
  return "Unknown";
}

IterateReport iterate(const std::vector<SurfacePoint>& seeds, int max_steps,
                      const Integer& max_height) {
  std::vector<SurfacePoint> known;
  std::set<SurfacePoint> seen;
  for (const SurfacePoint& s : seeds) {
    if (!seen.insert(s).second) {
      throw DomainError(Errc::Precondition,
                        "duplicate seed (" + s.str() + ")");
    }
    known.push_back(s);
  }

  IterateReport report;
  std::size_t fresh_begin = 0;
  for (int round = 1; round <= max_steps; ++round) {
    const std::size_t fresh_end = known.size();
    std::vector<SurfacePoint> discovered;
    for (std::size_t j = fresh_begin; j < fresh_end; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        const SurfacePoint& p1 = known[i];
        const SurfacePoint& p2 = known[j];
        std::optional<ChordResult> result;
        try {
          result = chord(p1, p2);
        } catch (const DomainError& e) {
          if (e.code() != Errc::DegenerateLine) throw;
          report.rejected.push_back(
              {{p1, p2}, RejectReason::DegenerateLine, std::nullopt, round});
          continue;
        }
        if (!result->classification.is_valid() &&
            result->classification.reason() ==
                DegenerateReason::CoincidesWithInput) {
          report.rejected.push_back({{p1, p2},
                                     RejectReason::CoincidesWithInput,
                                     result->third_point, round});
          continue;
        }
        if (seen.contains(result->third_point)) continue;
        Integer h = height(result->third_point);
        if (h > max_height) {
          report.rejected.push_back({{p1, p2}, RejectReason::HeightExceeded,
                                     result->third_point, round});
          continue;
        }
        seen.insert(result->third_point);
        discovered.push_back(result->third_point);
        report.entries.push_back(SurfaceCatalogEntry{
            result->third_point, result->theta3, {p1, p2},
            result->classification, std::move(h), round});
      }
    }
    report.rounds_run = round;
    if (discovered.empty()) break;
    fresh_begin = fresh_end;
    known.insert(known.end(), discovered.begin(), discovered.end());
  }

  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const SurfaceCatalogEntry& x,
                      const SurfaceCatalogEntry& y) {
                     if (x.height != y.height) return x.height < y.height;
                     return x.point < y.point;
                   });
  return report;
}

}  // namespace dualrect
