#include "dualrect/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "dualrect/errors.hpp"
#include "dualrect/integral.hpp"
#include "dualrect/selfdual.hpp"
#include "dualrect/serialize.hpp"
#include "dualrect/surface.hpp"

namespace dualrect::cli {
namespace {

using serialize::json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  OutputFormat format = OutputFormat::Table;
};

Integer parse_integer(const std::string& text) {
  const Rational r = Rational::parse(text);
  if (!r.is_integer()) {
    throw DomainError(Errc::Parse, "expected an integer, got '" + text + "'");
  }
  return r.numerator();
}

HyperbolaPoint parse_hyperbola_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    return HyperbolaPoint::from_x(Rational::parse(text));
  }
  return HyperbolaPoint::from_xy(Rational::parse(text.substr(0, comma)),
                                 Rational::parse(text.substr(comma + 1)));
}

const std::vector<DualPair>& theorem_one_pairs() {
  static const std::vector<DualPair> pairs = enumerate_integral();
  return pairs;
}

void emit_pairs(const Context& ctx, const std::vector<CatalogEntry>& rows,
                bool with_count) {
  switch (ctx.format) {
    case OutputFormat::Table:
      for (const CatalogEntry& e : rows) {
        ctx.out << e.pair.str();
        if (with_count) ctx.out << "  " << e.integral_sides;
        ctx.out << '\n';
      }
      break;
    case OutputFormat::Json:
      for (const CatalogEntry& e : rows) {
        ctx.out << serialize::to_json(e).dump() << '\n';
      }
      break;
    case OutputFormat::Csv:
      ctx.out << serialize::csv_header() << '\n';
      for (const CatalogEntry& e : rows) {
        ctx.out << serialize::csv_row(e.pair) << '\n';
      }
      break;
  }
}

void emit_pair(const Context& ctx, const DualPair& pair) {
  switch (ctx.format) {
    case OutputFormat::Table:
      ctx.out << pair.str() << '\n';
      break;
    case OutputFormat::Json:
      ctx.out << json{{"pair", serialize::to_json(pair)},
                      {"integral_sides", pair.integral_sides()}}
                     .dump()
              << '\n';
      break;
    case OutputFormat::Csv:
      ctx.out << serialize::csv_header() << '\n'
              << serialize::csv_row(pair) << '\n';
      break;
  }
}

void emit_witness(const Context& ctx, const Integer& a, const Integer& b,
                  const std::optional<PartnerWitness>& w) {
  switch (ctx.format) {
    case OutputFormat::Table:
      if (w) {
        ctx.out << "a=" << w->a << " b=" << w->b
                << " discriminant=" << w->discriminant << " t=" << w->t
                << " c=" << w->c << " d=" << w->d << "  " << w->pair()
                << '\n';
      } else {
        ctx.out << "none\n";
      }
      break;
    case OutputFormat::Json:
      ctx.out << (w ? serialize::to_json(*w) : json(nullptr)).dump() << '\n';
      break;
    case OutputFormat::Csv:
      ctx.out << "a,b,discriminant,t,c,d\n";
      if (w) {
        ctx.out << w->a << ',' << w->b << ',' << w->discriminant << ','
                << w->t << ',' << w->c << ',' << w->d << '\n';
      }
      break;
  }
  if (!w) {
    ctx.err << "no rational partner for (" << a << "," << b
            << "): discriminant is negative, not a perfect square, or d <= 0\n";
  }
}

void emit_hyperbola_point(const Context& ctx, const HyperbolaPoint& p) {
  const Rectangle rect = to_rectangle(p);
  switch (ctx.format) {
    case OutputFormat::Table:
      ctx.out << p << "  rectangle " << rect << '\n';
      break;
    case OutputFormat::Json:
      ctx.out << json{{"point", serialize::to_json(p)},
                      {"rectangle", serialize::to_json(rect)}}
                     .dump()
              << '\n';
      break;
    case OutputFormat::Csv:
      ctx.out << "x,y\n" << p.x() << ',' << p.y() << '\n';
      break;
  }
}

void emit_chord(const Context& ctx, const SurfacePoint& p1,
                const SurfacePoint& p2, const ChordResult& r) {
  const Completion& cls = r.classification;
  switch (ctx.format) {
    case OutputFormat::Table:
      ctx.out << "coefficients: " << r.coefficients[0] << ' '
              << r.coefficients[1] << ' ' << r.coefficients[2] << '\n'
              << "roots: 0 1 " << r.theta3 << '\n'
              << "theta3: " << r.theta3 << '\n'
              << "third point: " << r.third_point.str() << '\n'
              << "d: " << cls.d << '\n'
              << "height: " << height(r.third_point) << '\n'
              << "classification: " << cls.label();
      if (cls.is_valid()) ctx.out << ' ' << cls.pair();
      ctx.out << '\n';
      break;
    case OutputFormat::Json:
      ctx.out << serialize::to_json(r, p1, p2).dump() << '\n';
      break;
    case OutputFormat::Csv:
      ctx.out << "alpha,beta,gamma,theta3,a,b,c,d,classification\n"
              << r.coefficients[0] << ',' << r.coefficients[1] << ','
              << r.coefficients[2] << ',' << r.theta3 << ','
              << r.third_point.a() << ',' << r.third_point.b() << ','
              << r.third_point.c() << ',' << cls.d << ',' << cls.label()
              << '\n';
      break;
  }
  if (!cls.is_valid()) {
    ctx.err << "third point does not give a pair of dual rectangles: "
            << cls.label() << '\n';
  }
}

void emit_catalog(const Context& ctx, std::ostream& os,
                  const std::vector<SurfaceCatalogEntry>& entries) {
  switch (ctx.format) {
    case OutputFormat::Table:
      for (const SurfaceCatalogEntry& e : entries) {
        os << e.height << "  " << e.round << "  " << e.point.str() << "  "
           << e.classification.label();
        if (e.classification.is_valid()) os << ' ' << e.classification.pair();
        os << '\n';
      }
      break;
    case OutputFormat::Json:
      for (const SurfaceCatalogEntry& e : entries) {
        os << serialize::to_json(e).dump() << '\n';
      }
      break;
    case OutputFormat::Csv:
      os << "a,b,c,d,theta3,height,round,classification\n";
      for (const SurfaceCatalogEntry& e : entries) {
        os << e.point.a() << ',' << e.point.b() << ',' << e.point.c() << ','
           << e.classification.d << ',' << e.theta3 << ',' << e.height << ','
           << e.round << ',' << e.classification.label() << '\n';
      }
      break;
  }
}

std::vector<SurfacePoint> load_seeds(const std::string& source) {
  if (source == "theorem1") {
    std::vector<SurfacePoint> seeds;
    for (const DualPair& p : theorem_one_pairs()) seeds.push_back(lift(p));
    return seeds;
  }
  std::ifstream in(source);
  if (!in) {
    throw CLI::ValidationError("--seeds", "cannot open seed file " + source);
  }
  return serialize::read_seed_points(in);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Context ctx{out, err};

  CLI::App app{"Exact computations with dual rectangles", "dualrect"};
  app.fallthrough();
  app.require_subcommand(1);
  const std::map<std::string, OutputFormat> formats{
      {"table", OutputFormat::Table},
      {"json", OutputFormat::Json},
      {"csv", OutputFormat::Csv}};
  app.add_option("--format", ctx.format, "Output format: table, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  // Actions run after parsing succeeds, so domain errors never mix with
  // usage errors.
  std::function<void()> action;

  auto* solve = app.add_subcommand("solve", "Partner rectangles for short sides b, d");
  std::string solve_b, solve_d;
  solve->add_option("--b", solve_b, "Short side of the first rectangle")->required();
  solve->add_option("--d", solve_d, "Short side of the second rectangle")->required();
  solve->callback([&] {
    action = [&] {
      emit_pair(ctx, solve_partner(Rational::parse(solve_b),
                                   Rational::parse(solve_d)));
    };
  });

  auto* partner = app.add_subcommand("partner", "Rational partner of an integer rectangle");
  std::string partner_a, partner_b;
  partner->add_option("--a", partner_a, "Long side")->required();
  partner->add_option("--b", partner_b, "Short side")->required();
  partner->callback([&] {
    action = [&] {
      const Integer a = parse_integer(partner_a);
      const Integer b = parse_integer(partner_b);
      emit_witness(ctx, a, b, partner_of_integer_rectangle(a, b));
    };
  });

  auto* enumerate = app.add_subcommand("enumerate", "Integral enumerations");
  enumerate->require_subcommand(1);
  auto* integral = enumerate->add_subcommand("integral", "Pairs with four integral sides");
  long bound = kShortSideBound;
  integral->add_option("--bound", bound, "Largest short side to scan")
      ->check(CLI::PositiveNumber);
  integral->callback([&] {
    action = [&] {
      std::vector<CatalogEntry> rows;
      for (const DualPair& p : enumerate_integral(bound)) {
        rows.push_back(make_entry(p, Provenance::Enumerated));
      }
      emit_pairs(ctx, rows, false);
    };
  });
  auto* three = enumerate->add_subcommand("three-integral", "Pairs with at least three integral sides");
  three->callback([&] {
    action = [&] { emit_pairs(ctx, enumerate_three_integral(), true); };
  });

  auto* oracle = app.add_subcommand("oracle", "Brute-force catalog of integer rectangles");
  long a_max = 0;
  oracle->add_option("--a-max", a_max, "Largest long side to scan")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle->callback([&] {
    action = [&] { emit_pairs(ctx, brute_force_oracle(a_max), true); };
  });

  auto* selfdual = app.add_subcommand("selfdual", "Group of self-dual rectangles");
  selfdual->require_subcommand(1);
  std::string point_p, point_q;
  long times = 0;
  auto* sd_add = selfdual->add_subcommand("add", "P + Q");
  sd_add->add_option("P", point_p, "x or x,y")->required();
  sd_add->add_option("Q", point_q, "x or x,y")->required();
  sd_add->callback([&] {
    action = [&] {
      emit_hyperbola_point(ctx, add(parse_hyperbola_point(point_p),
                                    parse_hyperbola_point(point_q)));
    };
  });
  auto* sd_double = selfdual->add_subcommand("double", "P + P");
  sd_double->add_option("P", point_p, "x or x,y")->required();
  sd_double->callback([&] {
    action = [&] {
      emit_hyperbola_point(ctx, double_point(parse_hyperbola_point(point_p)));
    };
  });
  auto* sd_inverse = selfdual->add_subcommand("inverse", "-P");
  sd_inverse->add_option("P", point_p, "x or x,y")->required();
  sd_inverse->callback([&] {
    action = [&] {
      emit_hyperbola_point(ctx, inverse(parse_hyperbola_point(point_p)));
    };
  });
  auto* sd_mul = selfdual->add_subcommand("mul", "n P");
  sd_mul->add_option("n", times, "Integer multiplier")->required();
  sd_mul->add_option("P", point_p, "x or x,y")->required();
  sd_mul->callback([&] {
    action = [&] {
      emit_hyperbola_point(ctx, multiply(times, parse_hyperbola_point(point_p)));
    };
  });

  auto* surface = app.add_subcommand("surface", "Chords on 2c^2 - abc + 4(a+b) = 0");
  surface->require_subcommand(1);
  auto* sf_chord = surface->add_subcommand("chord", "Third intersection of the line through two points");
  std::string chord_p1, chord_p2;
  sf_chord->add_option("P1", chord_p1, "a,b,c")->required();
  sf_chord->add_option("P2", chord_p2, "a,b,c")->required();
  sf_chord->callback([&] {
    action = [&] {
      const SurfacePoint p1 = SurfacePoint::parse(chord_p1);
      const SurfacePoint p2 = SurfacePoint::parse(chord_p2);
      emit_chord(ctx, p1, p2, chord(p1, p2));
    };
  });
  auto* sf_iterate = surface->add_subcommand("iterate", "Breadth-first chord closure");
  std::string seeds_source, out_path;
  int steps = 1;
  std::string max_height_text = "1000000";
  sf_iterate->add_option("--seeds", seeds_source, "Seed file of a,b,c lines, or 'theorem1'")
      ->required();
  sf_iterate->add_option("--steps", steps, "Number of rounds")
      ->check(CLI::NonNegativeNumber);
  sf_iterate->add_option("--max-height", max_height_text, "Largest height kept");
  sf_iterate->add_option("--out", out_path, "JSONL catalog path (default: stdout)");
  sf_iterate->callback([&] {
    action = [&] {
      const Integer max_height = parse_integer(max_height_text);
      const IterateReport report =
          iterate(load_seeds(seeds_source), steps, max_height);
      for (const Rejection& r : report.rejected) {
        err << "round " << r.round << ": " << to_string(r.reason) << " for ("
            << r.parents.first.str() << ") + (" << r.parents.second.str()
            << ")";
        if (r.point) {
          err << " -> (" << r.point->str() << "), height " << height(*r.point);
        }
        err << '\n';
      }
      err << report.entries.size() << " new points in " << report.rounds_run
          << " round(s), " << report.rejected.size() << " rejected\n";
      if (out_path.empty()) {
        emit_catalog(ctx, out, report.entries);
        return;
      }
      std::ofstream file(out_path);
      if (!file) {
        throw DomainError(Errc::Precondition, "cannot write " + out_path);
      }
      Context file_ctx{file, err, OutputFormat::Json};
      emit_catalog(file_ctx, file, report.entries);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (action) action();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace dualrect::cli
