#include "dualrect/serialize.hpp"

#include <istream>
#include <ostream>

#include "dualrect/errors.hpp"

namespace dualrect::serialize {

json to_json(const Rational& x) { return x.str(); }

json to_json(const Rectangle& r) {
  return json::array({r.long_side().str(), r.short_side().str()});
}

json to_json(const DualPair& p) {
  return json{{"first", to_json(p.first())}, {"second", to_json(p.second())}};
}

json to_json(const CatalogEntry& e) {
  return json{{"pair", to_json(e.pair)},
              {"integral_sides", e.integral_sides},
              {"provenance", std::string(to_string(e.provenance))}};
}

json to_json(const PartnerWitness& w) {
  return json{{"a", w.a.get_str()},
              {"b", w.b.get_str()},
              {"discriminant", w.discriminant.get_str()},
              {"t", w.t.get_str()},
              {"c", w.c.str()},
              {"d", w.d.str()},
              {"pair", to_json(w.pair())}};
}

json to_json(const HyperbolaPoint& p) {
  return json::array({p.x().str(), p.y().str()});
}

json to_json(const SurfacePoint& p) {
  return json::array({p.a().str(), p.b().str(), p.c().str()});
}

namespace {

// Heights are unbounded, so they fall back to decimal strings once they no
// longer fit a JSON integer.
json integer_json(const Integer& n) {
  return n.fits_slong_p() ? json(n.get_si()) : json(n.get_str());
}

void put_classification(json& j, const Completion& c) {
  j["classification"] = c.label();
  j["d"] = c.d.str();
  if (c.is_valid()) j["pair"] = to_json(c.pair());
}

}  // namespace

json to_json(const ChordResult& r, const SurfacePoint& p1,
             const SurfacePoint& p2) {
  json j{{"point", to_json(r.third_point)},
         {"theta3", r.theta3.str()},
         {"parents", json::array({to_json(p1), to_json(p2)})},
         {"coefficients",
          json::array({r.coefficients[0].get_str(),
                       r.coefficients[1].get_str(),
                       r.coefficients[2].get_str()})},
         {"height", integer_json(height(r.third_point))}};
  put_classification(j, r.classification);
  return j;
}

json to_json(const SurfaceCatalogEntry& e) {
  json j{{"point", to_json(e.point)},
         {"theta3", e.theta3.str()},
         {"parents",
          json::array({to_json(e.parents.first), to_json(e.parents.second)})},
         {"height", integer_json(e.height)},
         {"round", e.round}};
  put_classification(j, e.classification);
  return j;
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) {
    throw DomainError(Errc::Parse, "expected fraction string, got " + j.dump());
  }
  return Rational::parse(j.get<std::string>());
}

Rectangle rectangle_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw DomainError(Errc::Parse, "expected [long, short], got " + j.dump());
  }
  return Rectangle(rational_from_json(j[0]), rational_from_json(j[1]));
}

DualPair pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("first") || !j.contains("second")) {
    throw DomainError(Errc::Parse, "expected {first, second}, got " + j.dump());
  }
  return DualPair(rectangle_from_json(j["first"]),
                  rectangle_from_json(j["second"]));
}

SurfacePoint surface_point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw DomainError(Errc::Parse, "expected [a, b, c], got " + j.dump());
  }
  return SurfacePoint(rational_from_json(j[0]), rational_from_json(j[1]),
                      rational_from_json(j[2]));
}

std::string csv_header() { return "a,b,c,d,integral_sides"; }

std::string csv_row(const DualPair& p) {
  return p.first().long_side().str() + "," + p.first().short_side().str() +
         "," + p.second().long_side().str() + "," +
         p.second().short_side().str() + "," +
         std::to_string(p.integral_sides());
}

void write_jsonl(std::ostream& os, const std::vector<json>& rows) {
  for (const json& row : rows) os << row.dump() << '\n';
}

std::vector<SurfacePoint> read_seed_points(std::istream& is) {
  std::vector<SurfacePoint> points;
  std::string line;
  while (std::getline(is, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::string compact;
    for (char ch : line) {
      if (ch != ' ' && ch != '\t' && ch != '\r') compact.push_back(ch);
    }
    if (compact.empty()) continue;
    points.push_back(SurfacePoint::parse(compact));
  }
  return points;
}

}  // namespace dualrect::serialize
