#include "btq/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "btq/building.hpp"
#include "btq/central_fiber.hpp"
#include "btq/cw.hpp"
#include "btq/invariants.hpp"
#include "btq/presentation.hpp"
#include "btq/smith.hpp"
#include "btq/tietze.hpp"
#include "btq/todd_coxeter.hpp"

namespace btq::commands {

using report::RunReport;

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::string orbit_sizes(const std::vector<fano::Orbit>& orbits) {
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return join(sizes);
}

nlohmann::json integer_json(const mpz_class& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Checks that the group acts on PG(2,2) by a homomorphism preserving incidence.
void check_fano_action(RunReport& r) {
  const auto& g = fano::ExtendedGroup::instance();
  bool hom = true, incidence = true;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order() && hom; ++b) {
      const std::size_t ab = g.multiply(a, b);
      for (std::size_t e = 0; e < 14; ++e) hom = hom && g.act(ab, e) == g.act(a, g.act(b, e));
    }
    for (std::size_t x = 0; x < 14; ++x) {
      for (std::size_t y = 0; y < 14; ++y) {
        const bool before = fano::incident(fano::GeomElement::from_index(x), fano::GeomElement::from_index(y));
        const bool after = fano::incident(fano::GeomElement::from_index(g.act(a, x)),
                                          fano::GeomElement::from_index(g.act(a, y)));
        incidence = incidence && before == after;
      }
    }
  }
  r.check("action is a homomorphism (336^2 products)", hom);
  r.check("action preserves incidence", incidence);
}

void check_group_orders(RunReport& r, const fano::Flag& f) {
  r.check("|GL3(2)|", 168, static_cast<long>(fano::collineation_group().order()));
  r.check("|GL3(2) x| <tau>|", 336, static_cast<long>(fano::full_group().order()));
  const auto d8 = fano::flag_stabilizer_d8(f);
  const auto d16 = fano::sylow2_d16(f);
  r.check("|D8| flag stabilizer", 8, static_cast<long>(d8.order()));
  r.check("|D16| Sylow 2-subgroup", 16, static_cast<long>(d16.order()));
  r.check("|point stabilizer|", 24, static_cast<long>(fano::element_stabilizer(f.point).order()));
  r.check("D16 is dihedral (non-abelian, element of order 8)", d16.is_group() && !d16.is_abelian() &&
                                                                   d16.max_element_order() == 8);
  r.check("D8 orbit sizes on points", "1,2,4", orbit_sizes(fano::orbits(d8, fano::all_points())));
  r.check("D8 orbit sizes on lines", "1,2,4", orbit_sizes(fano::orbits(d8, fano::all_lines())));
}

fano::Subgroup named_subgroup(const std::string& name, const fano::Flag& f) {
  if (name == "trivial") return fano::trivial_subgroup();
  if (name == "d8") return fano::flag_stabilizer_d8(f);
  if (name == "d16") return fano::sylow2_d16(f);
  if (name == "stabilizer") return fano::element_stabilizer(f.point);
  if (name == "collineations") return fano::collineation_group();
  if (name == "full") return fano::full_group();
  throw UsageError("unknown subgroup '" + name + "'");
}

// Random unimodular column operations, unit column scalings and overall
// p-power scalings must not change the canonical form.
void canonical_form_fuzz(RunReport& r, unsigned p, std::size_t cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  std::size_t agreed = 0;
  for (std::size_t n = 0; n < cases; ++n) {
    building::IntMatrix3 m;
    do {
      for (auto& row : m) {
        for (auto& x : row) x = draw(-20, 20);
      }
    } while (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]) ==
             0);
    const auto reference = building::canonicalize(m, p);
    building::RatMatrix3 t;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) t[i][j] = m[i][j];
    }
    for (int step = 0; step < 6; ++step) {
      const int i = static_cast<int>(rng() % 3), j = static_cast<int>((i + 1 + rng() % 2) % 3);
      switch (rng() % 3) {
        case 0: {
          const long k = draw(-5, 5);
          for (auto& row : t) row[i] += k * row[j];
          break;
        }
        case 1:
          for (auto& row : t) std::swap(row[i], row[j]);
          break;
        default: {
          long u;
          do u = draw(-9, 9);
          while (u == 0 || u % static_cast<long>(p) == 0);
          for (auto& row : t) row[i] *= u;
        }
      }
    }
    const long e = draw(-3, 3);
    mpq_class scale = 1;
    for (long k = 0; k < std::labs(e); ++k) scale *= p;
    if (e < 0) scale = 1 / scale;
    for (auto& row : t) {
      for (auto& x : row) x *= scale;
    }
    if (building::canonicalize(t, p) == reference) ++agreed;
  }
  r.check("canonical form fuzz (" + std::to_string(cases) + " cases, seed " + std::to_string(seed) + ")",
          static_cast<long>(cases), static_cast<long>(agreed));
}

void check_ball(RunReport& r, const building::BuildingBall& b) {
  const long q = b.p;
  const long degree = 2 * (q * q + q + 1);
  if (b.radius >= 1) r.check("vertices within distance 1", 1 + degree,
                             static_cast<long>(std::count_if(b.distance.begin(), b.distance.end(),
                                                             [](unsigned d) { return d <= 1; })));
  bool degrees = true, triangles = true;
  for (std::size_t v = 0; v < b.vertices.size(); ++v) {
    if (b.is_interior(v)) degrees = degrees && static_cast<long>(b.adjacency[v].size()) == degree;
  }
  std::map<std::pair<std::size_t, std::size_t>, long> per_edge;
  for (const auto& t : b.triangles) {
    per_edge[{t[0], t[1]}]++;
    per_edge[{t[0], t[2]}]++;
    per_edge[{t[1], t[2]}]++;
  }
  for (const auto& e : b.edges) {
    const auto key = std::minmax(e.src, e.dst);
    if (b.is_interior(e.src) && b.is_interior(e.dst)) triangles = triangles && per_edge[key] == q + 1;
  }
  bool circuits = true;
  for (const auto& t : b.triangles) circuits = circuits && building::triangle_is_circuit(t, b);
  r.check("interior vertex degree " + std::to_string(degree), degrees);
  r.check("interior edges lie in " + std::to_string(q + 1) + " triangles", triangles);
  r.check("every triangle is an oriented circuit", circuits);
}

std::string emit(const cw::Complex& c, const std::string& format) {
  if (format == "json") return cw::to_json(c).dump(2) + "\n";
  return cw::to_text(c);
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unknown format '" + format + "'");
}

struct Pi1Result {
  pi1::Abelianization ab;
  pi1::CosetEnumeration tc;
  nlohmann::json json;
};

Pi1Result analyze(const pi1::Presentation& p, std::size_t max_cosets) {
  Pi1Result out;
  out.ab = pi1::abelianization(p);
  out.tc = pi1::todd_coxeter(p, max_cosets);
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : out.ab.factors) factors.push_back(integer_json(f));
  out.json = {{"factors", factors}, {"free_rank", out.ab.free_rank}};
  out.json["order"] = out.tc.order ? nlohmann::json(*out.tc.order) : nlohmann::json("overflow");
  return out;
}

void check_tc_consistency(RunReport& r, const Pi1Result& res) {
  if (!res.tc.order) return;
  const bool divides = res.ab.free_rank == 0 && *res.tc.order % std::stoul(res.ab.order()) == 0;
  r.check("abelianization order divides enumerated order", divides);
}

pi1::Presentation rose_presentation() {
  return pi1::make_presentation({"a", "b", "c"}, {"a a b a b a", "a b c b c b", "b c c c c c"});
}

// Quotient-level assertions shared by verify-paper and its flag sweep.
void check_quotient_pipeline(RunReport& r, const fano::Flag& f, std::size_t max_cosets, const std::string& prefix) {
  const auto q = central_fiber::quotient_by_d16(f);
  const auto c = q.census();
  r.check(prefix + "D16 pointwise fixity", q.fixity);
  r.check(prefix + "quotient census V/E/F", "4/18/15",
          std::to_string(c.vertices) + "/" + std::to_string(c.edges) + "/" + std::to_string(c.faces));
  r.check(prefix + "quotient matches the reference table", q.matches_table);
  const auto p = pi1::presentation_from_complex(q.named, "Pibar");
  const auto res = analyze(p, max_cosets);
  r.check(prefix + "H1 invariant factors", "[42]", res.json["factors"].dump());
  r.check(prefix + "H1 free rank", 0, static_cast<long>(res.ab.free_rank));
  r.check(prefix + "Todd-Coxeter order", "42", res.tc.order ? std::to_string(*res.tc.order) : "overflow");
}

}  // namespace

fano::Flag parse_flag(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("flag must look like P1,L2");
  try {
    const auto a = fano::GeomElement::parse(text.substr(0, comma));
    const auto b = fano::GeomElement::parse(text.substr(comma + 1));
    if (!a.is_point() || !b.is_line()) throw UsageError("flag must be a point then a line");
    return fano::Flag::make(a, b);
  } catch (const fano::FanoError& e) {
    throw UsageError(std::string("bad flag: ") + e.what());
  }
}

RunReport cmd_fano(const FanoArgs& a) {
  RunReport r;
  r.command = "fano";
  const auto flag = parse_flag(a.flag);
  if (a.orbits) {
    const auto h = named_subgroup(*a.orbits, flag);
    const auto orbits = fano::orbits(h, fano::all_elements());
    nlohmann::json list = nlohmann::json::array();
    std::ostringstream os;
    for (const auto& o : orbits) {
      nlohmann::json labels = nlohmann::json::array();
      for (const auto& e : o) {
        labels.push_back(e.label());
        os << (labels.size() > 1 ? " " : "") << e.label();
      }
      os << '\n';
      list.push_back(labels);
    }
    r.result = {{"subgroup", *a.orbits}, {"order", h.order()}, {"flag", flag.label()}, {"orbits", list}};
    r.text = os.str();
  }
  if (a.verify || !a.orbits) {
    check_group_orders(r, flag);
    r.check("D16 orbit sizes on points and lines", "2,4,8",
            orbit_sizes(fano::orbits(fano::sylow2_d16(flag), fano::all_elements())));
    check_fano_action(r);
  }
  return r;
}

RunReport cmd_building(const BuildingArgs& a) {
  RunReport r;
  r.command = "building";
  if (a.p < 2 || a.p > 13 || !building::is_prime(a.p)) throw UsageError("p must be a prime between 2 and 13");
  if (a.radius > building::kDefaultRadiusCap) {
    throw UsageError("radius " + std::to_string(a.radius) + " exceeds the cap of " +
                     std::to_string(building::kDefaultRadiusCap));
  }
  check_format(a.format, {"json", "dot"});
  const auto b = building::ball(a.p, a.radius);
  r.result = {{"p", a.p},
              {"radius", a.radius},
              {"vertices", b.vertices.size()},
              {"edges", b.edges.size()},
              {"triangles", b.triangles.size()}};
  if (a.format == "json") {
    const auto j = building::to_json(b);
    r.result["export"] = j;
    r.text = j.dump() + "\n";
  } else {
    r.text = building::to_dot(b);
    r.result["export"] = r.text;
  }
  check_ball(r, b);
  if (a.fuzz > 0) canonical_form_fuzz(r, a.p, a.fuzz, a.seed);
  return r;
}

RunReport cmd_central_fiber(const CentralFiberArgs& a) {
  RunReport r;
  r.command = "central-fiber";
  check_format(a.format, {"text", "json"});
  const auto c = central_fiber::build_dual_complex();
  const auto cert = cw::validate(c);
  r.check("components", 16, static_cast<long>(cert.vertices));
  r.check("double curves", 112, static_cast<long>(cert.edges));
  r.check("triple points", 112, static_cast<long>(cert.faces));
  r.check("Euler characteristic", 16, cert.euler_characteristic);
  r.result = {{"complex", cw::to_json(c)}};
  if (a.report) {
    for (const auto& e : central_fiber::verify_orbit_decomposition().entries) {
      r.check("[" + e.item + "] " + e.name, e.expected, e.actual);
    }
  } else {
    r.text = emit(c, a.format);
  }
  return r;
}

RunReport cmd_quotient(const QuotientArgs& a) {
  RunReport r;
  r.command = "quotient";
  check_format(a.format, {"text", "json"});
  const auto q = central_fiber::quotient_by_d16(parse_flag(a.flag));
  const auto c = q.census();
  r.check("pointwise fixity", q.fixity);
  r.check("vertices", 4, static_cast<long>(c.vertices));
  r.check("edges", 18, static_cast<long>(c.edges));
  r.check("faces", 15, static_cast<long>(c.faces));
  r.check("matches the reference table", q.matches_table);
  const auto& out = a.raw_labels ? q.complex : q.named;
  r.result = {{"flag", q.flag.label()}, {"complex", cw::to_json(out)}};
  r.text = emit(out, a.format);
  return r;
}

RunReport cmd_pi1(const Pi1Args& a) {
  RunReport r;
  r.command = "pi1";
  pi1::Presentation p;
  if (!a.input) {
    const auto q = central_fiber::quotient_by_d16(fano::default_flag());
    p = pi1::presentation_from_complex(q.named, a.basepoint.value_or("Pibar"));
  } else if (a.complex) {
    const auto c = cw::from_text(read_file(*a.input));
    if (c.vertices.empty()) throw UsageError("complex has no vertices");
    p = pi1::presentation_from_complex(c, a.basepoint.value_or(c.vertices.front()));
  } else {
    p = pi1::presentation_from_text(read_file(*a.input));
  }
  const auto res = analyze(p, a.max_cosets);
  r.result = res.json;
  check_tc_consistency(r, res);
  if (a.simplify) {
    const auto s = pi1::tietze_simplify(p);
    r.check("abelianization unchanged by Tietze moves", pi1::abelianization(s) == res.ab);
    r.result["simplified"] = pi1::to_text(s);
  }
  r.text = r.result.dump() + "\n";
  return r;
}

RunReport cmd_invariants(const InvariantsArgs& a) {
  RunReport r;
  r.command = "invariants";
  if (a.n < 1 || a.q < 2) throw UsageError("need --n >= 1 and --q >= 2");
  auto cover = invariants::proposition_invariants({a.n, a.q});
  r.check("c1^2 = 3 c2", cover.c1_sq == 3 * cover.c2);
  if (!a.descend) {
    cover.pg = a.pg;
    cover.q_irr = a.irregularity;
  }
  r.result = invariants::to_json(cover);
  r.result["N"] = a.n;
  r.result["q"] = a.q;
  if (a.descend) {
    auto down = invariants::etale_descent(cover, *a.descend);
    down.pg = a.pg;
    down.q_irr = a.irregularity;
    r.check("descended c1^2 = 3 c2", down.c1_sq == 3 * down.c2);
    const auto verdict = invariants::fake_plane_check(down);
    r.result["descended"] = invariants::to_json(down);
    r.result["descended"]["degree"] = *a.descend;
    r.result["fake_plane"] = {{"is_fake_plane", verdict.is_fake_plane}, {"reasons", verdict.reasons}};
  }
  r.text = r.result.dump() + "\n";
  return r;
}

RunReport cmd_verify_paper(const VerifyArgs& a) {
  RunReport r;
  r.command = "verify-paper";
  const auto flag = parse_flag(a.flag);
  check_group_orders(r, flag);
  check_fano_action(r);

  const auto b = building::ball(2, 2);
  check_ball(r, b);

  const auto cf = cmd_central_fiber({.report = true});
  r.assertions.insert(r.assertions.end(), cf.assertions.begin(), cf.assertions.end());

  check_quotient_pipeline(r, flag, a.max_cosets, "");

  const auto rose = rose_presentation();
  const auto m = pi1::exponent_matrix(rose);
  r.check("rose exponent matrix", "[[4, 2, 0], [1, 3, 2], [0, 1, 5]]", m.to_string());
  r.check("|det| of the rose exponent matrix", "42", mpz_class(abs(m.determinant())).get_str());
  const auto snf = pi1::smith_normal_form(m);
  r.check("rose Smith form", "1,1,42", [&] {
    std::string s;
    for (std::size_t i = 0; i < 3; ++i) s += (i ? "," : "") + snf.diagonal(i, i).get_str();
    return s;
  }());
  const auto simple = pi1::tietze_simplify(rose);
  r.check("rose simplifies to one generator", 1, static_cast<long>(simple.generators.size()));
  r.check("remaining relator has exponent 42", "42",
          simple.relators.size() == 1 ? std::to_string(simple.relators[0].size()) : "?");

  const long n = static_cast<long>(invariants::vertex_orbit_count(fano::trivial_subgroup()));
  r.check("vertex orbits of the trivial group", 16, n);
  r.check("vertex orbits of D16", 4, static_cast<long>(invariants::vertex_orbit_count(fano::sylow2_d16(flag))));
  const auto cover = invariants::proposition_invariants({n, 2});
  r.check("cover (chi, c1^2, c2)", "(16, 144, 48)",
          "(" + cover.chi.get_str() + ", " + cover.c1_sq.get_str() + ", " + cover.c2.get_str() + ")");
  auto down = invariants::etale_descent(cover, 16);
  r.check("descended (chi, c1^2, c2)", "(1, 9, 3)",
          "(" + down.chi.get_str() + ", " + down.c1_sq.get_str() + ", " + down.c2.get_str() + ")");
  down.pg = 0;
  down.q_irr = 0;
  r.check("fake plane numerics with pg = q = 0", invariants::fake_plane_check(down).is_fake_plane);

  if (a.flag_sweep) {
    for (const auto& f : fano::all_flags()) check_quotient_pipeline(r, f, a.max_cosets, f.label() + " ");
  }
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the 2-adic uniformization skeleton of a fake projective plane", "btq"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false, no_timing = false;
  std::optional<std::uint64_t> seed;
  app.add_flag("--json", json, "Print the run report as JSON");
  app.add_flag("--no-timing", no_timing, "Omit wall-clock time from the report");
  app.add_option("--seed", seed, "Seed for sampling-based checks");

  FanoArgs fano_args;
  auto* fano_cmd = app.add_subcommand("fano", "Group structure of PG(2,2) and its correlations");
  fano_cmd->add_flag("--verify", fano_args.verify, "Run the group and orbit assertions");
  fano_cmd->add_option("--orbits", fano_args.orbits, "Print orbits of a subgroup on the 14 elements")
      ->check(CLI::IsMember({"trivial", "d8", "d16", "stabilizer", "collineations", "full"}));
  fano_cmd->add_option("--flag", fano_args.flag, "Flag as P#,L#");

  BuildingArgs building_args;
  auto* building_cmd = app.add_subcommand("building", "A ball in the building of PGL3(Q_p)");
  building_cmd->add_option("--p", building_args.p, "Residue characteristic");
  building_cmd->add_option("--radius", building_args.radius, "Ball radius");
  building_cmd->add_option("--format", building_args.format, "json or dot");
  building_cmd->add_option("--fuzz", building_args.fuzz, "Canonical-form fuzz cases (needs --seed)");

  CentralFiberArgs cf_args;
  auto* cf_cmd = app.add_subcommand("central-fiber", "Dual complex of the central fiber");
  cf_cmd->add_flag("--report", cf_args.report, "Print the orbit-decomposition table");
  cf_cmd->add_option("--format", cf_args.format, "text or json");

  QuotientArgs q_args;
  auto* q_cmd = app.add_subcommand("quotient", "Quotient of the dual complex by D16");
  q_cmd->add_option("--flag", q_args.flag, "Flag seeding D16, as P#,L#");
  q_cmd->add_flag("--raw-labels", q_args.raw_labels, "Keep orbit labels instead of bar names");
  q_cmd->add_option("--format", q_args.format, "text or json");

  Pi1Args pi1_args;
  auto* pi1_cmd = app.add_subcommand("pi1", "Abelianization and coset enumeration");
  pi1_cmd->add_option("input", pi1_args.input, "Presentation file (default: the D16 quotient)");
  pi1_cmd->add_flag("--complex", pi1_args.complex, "Input is a complex in cw text format");
  pi1_cmd->add_option("--basepoint", pi1_args.basepoint, "Base vertex for a complex");
  pi1_cmd->add_option("--max-cosets", pi1_args.max_cosets, "Coset limit");
  pi1_cmd->add_flag("--simplify", pi1_args.simplify, "Also print a Tietze-simplified presentation");

  InvariantsArgs inv_args;
  auto* inv_cmd = app.add_subcommand("invariants", "Chern numbers from the uniformization data");
  inv_cmd->add_option("--n", inv_args.n, "Number of vertex orbits");
  inv_cmd->add_option("--q", inv_args.q, "Residue field size");
  inv_cmd->add_option("--descend", inv_args.descend, "Degree of a free quotient");
  inv_cmd->add_option("--pg", inv_args.pg, "Geometric genus, if known");
  inv_cmd->add_option("--irregularity", inv_args.irregularity, "Irregularity, if known");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the whole pipeline");
  verify_cmd->add_option("--flag", verify_args.flag, "Flag seeding D16, as P#,L#");
  verify_cmd->add_flag("--flag-sweep", verify_args.flag_sweep, "Repeat the quotient checks for all 21 flags");
  verify_cmd->add_option("--max-cosets", verify_args.max_cosets, "Coset limit");

  std::vector<const char*> argv{"btq"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  try {
    if (*fano_cmd) {
      r = cmd_fano(fano_args);
    } else if (*building_cmd) {
      if (building_args.fuzz > 0 && !seed) throw UsageError("--fuzz needs an explicit --seed");
      building_args.seed = seed.value_or(0);
      r = cmd_building(building_args);
    } else if (*cf_cmd) {
      r = cmd_central_fiber(cf_args);
    } else if (*q_cmd) {
      r = cmd_quotient(q_args);
    } else if (*pi1_cmd) {
      r = cmd_pi1(pi1_args);
    } else if (*inv_cmd) {
      r = cmd_invariants(inv_args);
    } else {
      r = cmd_verify_paper(verify_args);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (!no_timing) {
    r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  if (json) {
    out << r.to_json().dump(2) << "\n";
  } else {
    out << r.text;
    if (!r.assertions.empty()) out << r.table();
  }
  return r.exit_code();
}

}  // namespace btq::commands
