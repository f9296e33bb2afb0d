#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "dualrect/integral.hpp"
#include "dualrect/rational.hpp"
#include "dualrect/rectangle.hpp"
#include "dualrect/selfdual.hpp"
#include "dualrect/surface.hpp"

// Machine-readable encodings. Every rational is written as a fraction
// string ("343/88", "-6"), never as a JSON number.
namespace dualrect::serialize {

using nlohmann::json;

json to_json(const Rational& x);
json to_json(const Rectangle& r);          // ["long", "short"]
json to_json(const DualPair& p);           // {"first": [..], "second": [..]}
json to_json(const CatalogEntry& e);       // {"pair", "integral_sides", "provenance"}
json to_json(const PartnerWitness& w);
json to_json(const HyperbolaPoint& p);     // ["x", "y"]
json to_json(const SurfacePoint& p);       // ["a", "b", "c"]
json to_json(const ChordResult& r, const SurfacePoint& p1,
             const SurfacePoint& p2);
json to_json(const SurfaceCatalogEntry& e);

Rational rational_from_json(const json& j);
Rectangle rectangle_from_json(const json& j);
DualPair pair_from_json(const json& j);
SurfacePoint surface_point_from_json(const json& j);

/// "a,b,c,d,integral_sides"
std::string csv_header();
/// One CSV row for a pair, first rectangle then second.
std::string csv_row(const DualPair& p);

/// One compact JSON document per line.
void write_jsonl(std::ostream& os, const std::vector<json>& rows);

/// Seed file: one "a,b,c" point per line; blank lines and '#' comments are
/// skipped.
std::vector<SurfacePoint> read_seed_points(std::istream& is);

}  // namespace dualrect::serialize
