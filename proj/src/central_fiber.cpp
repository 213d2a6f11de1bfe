#include "btq/central_fiber.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace btq::central_fiber {

using fano::ExtendedGroup;
using fano::incident;

namespace {

enum class EdgeKind { D, DStar, DPair, EPair };
enum class FaceKind { P, PStar, Q, R };

struct EdgeInfo {
  EdgeKind kind;
  GeomElement a, b;
};

struct FaceInfo {
  FaceKind kind;
  GeomElement a, b;
  CyclicOrder3 order;
};

struct DualComplexData {
  cw::Complex complex;
  std::vector<EdgeInfo> edges;
  std::vector<FaceInfo> faces;
  std::unordered_map<std::string, std::size_t> edge_index;
  std::unordered_map<std::string, std::size_t> face_index;
};

std::vector<std::pair<GeomElement, GeomElement>> ordered_incident_pairs() {
  std::vector<std::pair<GeomElement, GeomElement>> out;
  for (const auto& e : fano::all_elements()) {
    for (const auto& f : fano::all_elements()) {
      if (incident(e, f)) out.emplace_back(e, f);
    }
  }
  return out;
}

GeomElement point_of(GeomElement a, GeomElement b) { return a.is_point() ? a : b; }
GeomElement line_of(GeomElement a, GeomElement b) { return a.is_point() ? b : a; }

DualComplexData build_data() {
  DualComplexData d;
  auto& c = d.complex;
  c.add_vertex(pi_label());
  c.add_vertex(pi_star_label());
  for (const auto& e : fano::all_elements()) c.add_vertex(component_label(e));

  auto add_edge = [&](EdgeInfo info, const std::string& label, const std::string& src, const std::string& dst) {
    d.edge_index[label] = c.add_edge(label, src, dst);
    d.edges.push_back(info);
  };
  for (const auto& p : fano::all_points()) add_edge({EdgeKind::D, p, p}, d_label(p), pi_label(), component_label(p));
  for (const auto& p : fano::all_points()) {
    add_edge({EdgeKind::DStar, p, p}, d_star_label(p), component_label(p), pi_star_label());
  }
  for (const auto& l : fano::all_lines()) add_edge({EdgeKind::D, l, l}, d_label(l), component_label(l), pi_label());
  for (const auto& l : fano::all_lines()) {
    add_edge({EdgeKind::DStar, l, l}, d_star_label(l), pi_star_label(), component_label(l));
  }
  const auto pairs = ordered_incident_pairs();
  for (const auto& [e, f] : pairs) {
    add_edge({EdgeKind::DPair, e, f}, d_pair_label(e, f), component_label(e), component_label(f));
  }
  for (const auto& [e, f] : pairs) {
    add_edge({EdgeKind::EPair, e, f}, e_pair_label(e, f), component_label(e), component_label(e));
  }

  auto add_face = [&](FaceInfo info, const std::string& label, const std::vector<std::string>& word) {
    std::vector<std::pair<std::string, int>> w;
    for (const auto& e : word) w.emplace_back(e, 1);
    d.face_index[label] = c.add_face(label, w);
    d.faces.push_back(info);
  };
  for (const auto& p : fano::all_points()) {
    for (const auto& l : fano::all_lines()) {
      if (!incident(p, l)) continue;
      add_face({FaceKind::P, p, l, {}}, p_label(p, l), {d_label(p), d_pair_label(p, l), d_label(l)});
    }
  }
  for (const auto& p : fano::all_points()) {
    for (const auto& l : fano::all_lines()) {
      if (!incident(p, l)) continue;
      add_face({FaceKind::PStar, p, l, {}}, p_star_label(p, l),
               {d_star_label(l), d_pair_label(l, p), d_star_label(p)});
    }
  }
  for (const auto& [e, f] : pairs) {
    add_face({FaceKind::Q, e, f, {}}, q_label(e, f), {d_pair_label(e, f), d_pair_label(f, e), e_pair_label(e, f)});
  }
  for (const auto& e : fano::all_elements()) {
    const auto orders = CyclicOrder3::of(e);
    const auto& f = orders[0].order;
    add_face({FaceKind::R, e, e, orders[0]}, orders[0].label(),
             {e_pair_label(e, f[0]), e_pair_label(e, f[1]), e_pair_label(e, f[2])});
    add_face({FaceKind::R, e, e, orders[1]}, orders[1].label(),
             {e_pair_label(e, f[2]), e_pair_label(e, f[1]), e_pair_label(e, f[0])});
  }
  return d;
}

const DualComplexData& data() {
  static const DualComplexData d = build_data();
  return d;
}

cw::CellAction build_action() {
  const auto& d = data();
  const auto& c = d.complex;
  const auto& G = ExtendedGroup::instance();
  cw::CellAction a;
  a.group.order = G.order();
  a.group.identity = G.identity();
  a.group.table = G.multiplication_table();

  for (std::size_t gi = 0; gi < G.order(); ++gi) {
    const auto& g = G.element(gi);
    auto img = [&](GeomElement e) { return fano::act(g, e); };

    std::vector<std::size_t> vertex(c.vertices.size());
    vertex[0] = g.duality ? 1 : 0;
    vertex[1] = g.duality ? 0 : 1;
    for (const auto& e : fano::all_elements()) vertex[2 + e.index()] = 2 + img(e).index();

    std::vector<cw::SignedEdge> edge(c.edges.size());
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      const auto& info = d.edges[i];
      std::string target;
      switch (info.kind) {
        case EdgeKind::D: target = g.duality ? d_star_label(img(info.a)) : d_label(img(info.a)); break;
        case EdgeKind::DStar: target = g.duality ? d_label(img(info.a)) : d_star_label(img(info.a)); break;
        case EdgeKind::DPair: target = d_pair_label(img(info.a), img(info.b)); break;
        case EdgeKind::EPair: target = e_pair_label(img(info.a), img(info.b)); break;
      }
      edge[i] = {d.edge_index.at(target), 1};
    }

    std::vector<std::size_t> face(c.faces.size());
    for (std::size_t i = 0; i < c.faces.size(); ++i) {
      const auto& info = d.faces[i];
      std::string target;
      switch (info.kind) {
        case FaceKind::P:
        case FaceKind::PStar: {
          const GeomElement x = img(info.a), y = img(info.b);
          const bool star = (info.kind == FaceKind::PStar) != g.duality;
          target = star ? p_star_label(point_of(x, y), line_of(x, y)) : p_label(point_of(x, y), line_of(x, y));
          break;
        }
        case FaceKind::Q: target = q_label(img(info.a), img(info.b)); break;
        case FaceKind::R: {
          const auto& o = info.order.order;
          target = CyclicOrder3::normalized(img(info.a), {img(o[0]), img(o[1]), img(o[2])}).label();
          break;
        }
      }
      face[i] = d.face_index.at(target);
    }
    try {
      a.elements.push_back(cw::make_permutation(c, std::move(vertex), std::move(edge), face));
    } catch (const cw::CwError& e) {
      throw cw::CwError("group element " + std::to_string(gi) + ": " + e.what());
    }
  }
  return a;
}

const cw::CellAction& action() {
  static const cw::CellAction a = build_action();
  return a;
}

std::string sizes_string(std::vector<std::size_t> sizes) {
  std::sort(sizes.begin(), sizes.end());
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
  os << "}";
  return os.str();
}

std::vector<std::size_t> orbit_sizes(const std::vector<std::vector<std::size_t>>& orbits) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits) out.push_back(o.size());
  return out;
}

const char* class_name(int cls) {
  static constexpr const char* kNames[] = {"p", "p'", "p''"};
  return kNames[cls];
}

}  // namespace

std::string pi_label() { return "Pi"; }
std::string pi_star_label() { return "Pi*"; }
std::string component_label(GeomElement e) { return "C(" + e.label() + ")"; }
std::string d_label(GeomElement e) { return "D(" + e.label() + ")"; }
std::string d_star_label(GeomElement e) { return "D*(" + e.label() + ")"; }
std::string d_pair_label(GeomElement e, GeomElement f) { return "D(" + e.label() + "," + f.label() + ")"; }
std::string e_pair_label(GeomElement e, GeomElement f) { return "E(" + e.label() + "," + f.label() + ")"; }
std::string p_label(GeomElement a, GeomElement b) {
  return "P(" + point_of(a, b).label() + "," + line_of(a, b).label() + ")";
}
std::string p_star_label(GeomElement a, GeomElement b) {
  return "P*(" + point_of(a, b).label() + "," + line_of(a, b).label() + ")";
}
std::string q_label(GeomElement e, GeomElement f) { return "Q(" + e.label() + "," + f.label() + ")"; }

std::array<CyclicOrder3, 2> CyclicOrder3::of(GeomElement e) {
  const auto f = fano::incident_elements(e);
  return {CyclicOrder3{e, {f[0], f[1], f[2]}}, CyclicOrder3{e, {f[0], f[2], f[1]}}};
}

CyclicOrder3 CyclicOrder3::normalized(GeomElement e, std::array<GeomElement, 3> order) {
  const auto least = std::min_element(order.begin(), order.end());
  std::rotate(order.begin(), least, order.end());
  return {e, order};
}

bool CyclicOrder3::is_forward() const { return order[1] < order[2]; }

std::string CyclicOrder3::label() const {
  return "R(" + e.label() + ";" + order[0].label() + "," + order[1].label() + "," + order[2].label() + ")";
}

cw::Complex build_dual_complex() { return data().complex; }

cw::CellAction pgl27_action() { return action(); }

bool OrbitReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.pass; });
}

OrbitReport verify_orbit_decomposition() {
  const auto& d = data();
  const auto& c = d.complex;
  const auto& a = action();
  const auto& G = ExtendedGroup::instance();
  OrbitReport r;
  auto add = [&](std::string item, std::string name, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    r.entries.push_back({std::move(item), std::move(name), std::move(expected), std::move(actual), pass});
  };
  auto yes = [](bool b) { return std::string(b ? "true" : "false"); };

  const auto cert = cw::validate(c);
  add("census", "cell counts (V,E,F)", "(16,112,112)",
      "(" + std::to_string(cert.vertices) + "," + std::to_string(cert.edges) + "," + std::to_string(cert.faces) + ")");
  add("census", "Euler characteristic", "16", std::to_string(cert.euler_characteristic));

  bool action_ok = true;
  std::string action_error;
  try {
    cw::validate_action(c, a);
  } catch (const cw::CwError& e) {
    action_ok = false;
    action_error = e.what();
  }
  add("action", "order-336 group acts compatibly with all boundary words", "true",
      action_ok ? "true" : "false: " + action_error);

  // (1) components are permuted like the elements; correlations swap Pi, Pi*.
  bool labels_ok = true;
  for (std::size_t g = 0; g < G.order(); ++g) {
    const auto& pg = a.elements[g];
    labels_ok = labels_ok && (pg.vertex[0] == (G.element(g).duality ? 1u : 0u));
    for (const auto& e : fano::all_elements()) {
      labels_ok = labels_ok && pg.vertex[2 + e.index()] == 2 + G.act(g, e.index());
    }
  }
  add("1", "C(e) permuted as the elements e; correlations exchange Pi and Pi*", "true", yes(labels_ok));

  auto edges_between = [&](std::size_t u, std::size_t v) {
    std::size_t n = 0;
    for (const auto& e : c.edges) n += (e.src == u && e.dst == v) || (e.src == v && e.dst == u);
    return n;
  };
  auto face_touches = [&](const cw::Face& f, std::size_t v) {
    return std::any_of(f.boundary.begin(), f.boundary.end(), [&](const cw::SignedEdge& s) { return c.tail(s) == v; });
  };

  // (2) Pi and Pi* are disjoint.
  bool disjoint = edges_between(0, 1) == 0;
  for (const auto& f : c.faces) disjoint = disjoint && !(face_touches(f, 0) && face_touches(f, 1));
  add("2", "Pi and Pi* share no edge or face", "true", yes(disjoint));

  // (3) C(e) meets Pi and Pi* in one curve each.
  bool single = true;
  for (const auto& e : fano::all_elements()) {
    single = single && edges_between(0, 2 + e.index()) == 1 && edges_between(1, 2 + e.index()) == 1;
  }
  add("3", "each C(e) meets Pi and Pi* in exactly one edge each", "true", yes(single));

  // (4), (5) side components meet iff incident, in two oppositely directed edges.
  bool nonincident_empty = true, incident_two = true;
  for (const auto& e : fano::all_elements()) {
    for (const auto& f : fano::all_elements()) {
      if (e == f) continue;
      const std::size_t u = 2 + e.index(), v = 2 + f.index();
      if (!incident(e, f)) {
        nonincident_empty = nonincident_empty && edges_between(u, v) == 0;
      } else {
        std::size_t uv = 0;
        for (const auto& x : c.edges) uv += (x.src == u && x.dst == v);
        incident_two = incident_two && edges_between(u, v) == 2 && uv == 1;
      }
    }
  }
  add("4", "C(e), C(f) disjoint for distinct non-incident e, f", "true", yes(nonincident_empty));
  add("5", "C(e), C(f) meet in two edges, one each way, for incident e, f", "true", yes(incident_two));

  // (6) three loops at each C(e); for each incident f exactly one meets C(f).
  bool loops_ok = true;
  for (const auto& e : fano::all_elements()) {
    const std::size_t u = 2 + e.index();
    std::vector<std::size_t> loops;
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      if (c.edges[i].src == u && c.edges[i].dst == u) loops.push_back(i);
    }
    loops_ok = loops_ok && loops.size() == 3;
    for (const auto& f : fano::incident_elements(e)) {
      const std::size_t v = 2 + f.index();
      std::size_t meeting = 0;
      for (auto li : loops) {
        bool meets = false;
        for (const auto& face : c.faces) {
          const bool has_loop = std::any_of(face.boundary.begin(), face.boundary.end(),
                                            [&](const cw::SignedEdge& s) { return s.edge == li; });
          meets = meets || (has_loop && face_touches(face, v));
        }
        meeting += meets;
      }
      loops_ok = loops_ok && meeting == 1;
    }
  }
  add("6", "each C(e) has 3 loops, exactly one meeting each incident C(f)", "true", yes(loops_ok));

  // (7) one face through Pi, C(e), C(f) and one through Pi*, C(e), C(f).
  bool p_points = true;
  for (const auto& [e, f] : ordered_incident_pairs()) {
    for (std::size_t pi : {0u, 1u}) {
      std::size_t n = 0;
      for (const auto& face : c.faces) {
        n += face_touches(face, pi) && face_touches(face, 2 + e.index()) && face_touches(face, 2 + f.index());
      }
      p_points = p_points && n == 1;
    }
  }
  add("7", "Pi.C(e).C(f) and Pi*.C(e).C(f) are single faces for incident e, f", "true", yes(p_points));

  // (8) E(e,f) meets C(f) in a single face.
  bool q_points = true;
  for (const auto& [e, f] : ordered_incident_pairs()) {
    const std::size_t loop = d.edge_index.at(e_pair_label(e, f));
    std::size_t n = 0;
    for (const auto& face : c.faces) {
      const bool has_loop = std::any_of(face.boundary.begin(), face.boundary.end(),
                                        [&](const cw::SignedEdge& s) { return s.edge == loop; });
      n += has_loop && face_touches(face, 2 + f.index());
    }
    q_points = q_points && n == 1;
  }
  add("8", "E(e,f) lies on exactly one face meeting C(f)", "true", yes(q_points));

  // (9) two self-triple faces per C(e), through all three loops, opposite orders.
  bool r_points = true;
  for (const auto& e : fano::all_elements()) {
    const std::size_t u = 2 + e.index();
    std::vector<const cw::Face*> self;
    for (const auto& face : c.faces) {
      const bool only_loops = std::all_of(face.boundary.begin(), face.boundary.end(), [&](const cw::SignedEdge& s) {
        return c.edges[s.edge].src == u && c.edges[s.edge].dst == u;
      });
      if (only_loops) self.push_back(&face);
    }
    r_points = r_points && self.size() == 2;
    if (self.size() != 2) continue;
    std::set<std::size_t> l0, l1;
    for (const auto& s : self[0]->boundary) l0.insert(s.edge);
    for (const auto& s : self[1]->boundary) l1.insert(s.edge);
    r_points = r_points && l0.size() == 3 && l0 == l1;
    // Opposite cyclic orders: the second word is a rotation of the reverse of the first.
    std::vector<std::size_t> w0, w1;
    for (const auto& s : self[0]->boundary) w0.push_back(s.edge);
    for (const auto& s : self[1]->boundary) w1.push_back(s.edge);
    std::reverse(w1.begin(), w1.end());
    bool rotated = false;
    for (std::size_t k = 0; k < 3; ++k) {
      std::rotate(w1.begin(), w1.begin() + 1, w1.end());
      rotated = rotated || w0 == w1;
    }
    r_points = r_points && rotated;
  }
  add("9", "each C(e) has two self-triple faces with opposite cyclic orders", "true", yes(r_points));

  const auto orb = cw::cell_orbits(c, a);
  add("orbits", "component orbit sizes", "{2,14}", sizes_string(orbit_sizes(orb.vertices)));
  add("orbits", "double-curve orbit sizes", "{14,14,42,42}", sizes_string(orbit_sizes(orb.edges)));
  add("orbits", "triple-point orbit sizes", "{28,42,42}", sizes_string(orbit_sizes(orb.faces)));

  auto orbit_of_edge = [&](std::size_t e) -> const std::vector<std::size_t>& {
    for (const auto& o : orb.edges) {
      if (std::binary_search(o.begin(), o.end(), e)) return o;
    }
    throw std::logic_error("edge without orbit");
  };
  auto orbit_of_face = [&](std::size_t f) -> const std::vector<std::size_t>& {
    for (const auto& o : orb.faces) {
      if (std::binary_search(o.begin(), o.end(), f)) return o;
    }
    throw std::logic_error("face without orbit");
  };
  auto edge_set = [&](auto&& pick) {
    std::vector<std::size_t> out;
    for (const auto& p : fano::all_points()) out.push_back(d.edge_index.at(pick(p, true)));
    for (const auto& l : fano::all_lines()) out.push_back(d.edge_index.at(pick(l, false)));
    std::sort(out.begin(), out.end());
    return out;
  };
  const GeomElement p0 = fano::all_points().front();
  const auto dp_dl_star = edge_set([](GeomElement e, bool pt) { return pt ? d_label(e) : d_star_label(e); });
  add("orbits", "orbit of D(p) is the seven D(p) and seven D*(l)", "true",
      yes(orbit_of_edge(d.edge_index.at(d_label(p0))) == dp_dl_star));
  const auto dl_dp_star = edge_set([](GeomElement e, bool pt) { return pt ? d_star_label(e) : d_label(e); });
  add("orbits", "orbit of D(l) is the seven D(l) and seven D*(p)", "true",
      yes(orbit_of_edge(d.edge_index.at(d_star_label(p0))) == dl_dp_star));

  bool p_with_star = true;
  for (const auto& p : fano::all_points()) {
    for (const auto& l : fano::all_lines()) {
      if (!incident(p, l)) continue;
      const auto& o = orbit_of_face(d.face_index.at(p_label(p, l)));
      p_with_star = p_with_star && std::binary_search(o.begin(), o.end(), d.face_index.at(p_star_label(p, l)));
    }
  }
  add("orbits", "face orbit of P(p,l) contains P*(p,l)", "true", yes(p_with_star));
  return r;
}

Census D16Quotient::census() const {
  return {complex.vertices.size(), complex.edges.size(), complex.faces.size(), complex.euler_characteristic()};
}

D16Quotient quotient_by_d16(const fano::Flag& f) {
  const auto& d = data();
  const auto& c = d.complex;
  const fano::Subgroup d16 = fano::sylow2_d16(f);
  const cw::CellAction sub = cw::restrict_action(action(), d16.members());

  D16Quotient out{f, {}, {}, {}, {}, false, false};
  out.fixity = cw::check_pointwise_fixity(c, sub);
  if (!out.fixity) throw cw::CwError("D16 does not fix its setwise-fixed cells pointwise for flag " + f.label());
  auto q = cw::quotient(c, sub);
  out.complex = std::move(q.complex);
  out.map = std::move(q.map);

  std::array<int, 14> cls{};
  for (const auto& e : fano::all_elements()) cls[e.index()] = fano::d8_orbit_class(f, e);
  auto nm = [&](GeomElement e) { return std::string(class_name(cls[e.index()])); };

  // Name each orbit from its members whose first subscript is a point.
  auto assign = [&](const std::string& orbit_label, const std::string& name) {
    auto [it, inserted] = out.names.emplace(orbit_label, name);
    if (!inserted && it->second != name) {
      throw cw::CwError("orbit " + orbit_label + " has inconsistent names " + it->second + " and " + name);
    }
  };
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    const std::string& orbit_label = out.complex.vertices[out.map.vertex[v]];
    if (v < 2) {
      assign(orbit_label, "Pibar");
    } else if (const auto e = GeomElement::from_index(v - 2); e.is_point()) {
      assign(orbit_label, "Cbar(" + nm(e) + ")");
    }
  }
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& info = d.edges[i];
    if (!info.a.is_point()) continue;
    const std::string& orbit_label = out.complex.edges[out.map.edge[i].edge].label;
    switch (info.kind) {
      case EdgeKind::D: assign(orbit_label, "Dbar(" + nm(info.a) + ")"); break;
      case EdgeKind::DStar: assign(orbit_label, "D*bar(" + nm(info.a) + ")"); break;
      case EdgeKind::DPair: assign(orbit_label, "Dbar(" + nm(info.a) + "," + nm(info.b) + ")"); break;
      case EdgeKind::EPair: assign(orbit_label, "Ebar(" + nm(info.a) + "," + nm(info.b) + ")"); break;
    }
  }
  for (std::size_t i = 0; i < c.faces.size(); ++i) {
    const auto& info = d.faces[i];
    const std::string& orbit_label = out.complex.faces[out.map.face[i]].label;
    switch (info.kind) {
      case FaceKind::P: assign(orbit_label, "Pbar(" + nm(info.a) + "," + nm(info.b) + ")"); break;
      case FaceKind::PStar: break;
      case FaceKind::Q:
        if (info.a.is_point()) assign(orbit_label, "Qbar(" + nm(info.a) + "," + nm(info.b) + ")");
        break;
      case FaceKind::R:
        if (info.a.is_point()) assign(orbit_label, "Rbar(" + nm(info.a) + ")");
        break;
    }
  }
  const std::size_t cells = out.complex.vertices.size() + out.complex.edges.size() + out.complex.faces.size();
  if (out.names.size() != cells) throw cw::CwError("some quotient cells received no name");

  out.named = cw::relabel(out.complex, out.names);
  out.matches_table = cw::isomorphic_labeled(out.complex, reference_quotient_table(), out.names);
  if (!out.matches_table) {
    throw cw::CwError("quotient for flag " + f.label() + " does not match the tabulated complex");
  }
  return out;
}

cw::Complex reference_quotient_table() {
  cw::Complex t;
  for (const char* v : {"Pibar", "Cbar(p)", "Cbar(p')", "Cbar(p'')"}) t.add_vertex(v);
  for (const char* x : {"p", "p'", "p''"}) {
    t.add_edge(std::string("Dbar(") + x + ")", "Pibar", std::string("Cbar(") + x + ")");
  }
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"p", "p"}, {"p", "p'"}, {"p'", "p"}, {"p'", "p''"}, {"p''", "p'"}, {"p''", "p''"}};
  for (const auto& [x, y] : pairs) t.add_edge("Dbar(" + x + "," + y + ")", "Cbar(" + x + ")", "Cbar(" + y + ")");
  for (const char* x : {"p", "p'", "p''"}) {
    t.add_edge(std::string("D*bar(") + x + ")", std::string("Cbar(") + x + ")", "Pibar");
  }
  for (const auto& [x, y] : pairs) t.add_edge("Ebar(" + x + "," + y + ")", "Cbar(" + x + ")", "Cbar(" + x + ")");

  for (const auto& [x, y] : pairs) {
    t.add_face("Pbar(" + x + "," + y + ")",
               {{"Dbar(" + x + ")", 1}, {"Dbar(" + x + "," + y + ")", 1}, {"D*bar(" + y + ")", 1}});
  }
  for (const auto& [x, y] : pairs) {
    t.add_face("Qbar(" + x + "," + y + ")",
               {{"Dbar(" + x + "," + y + ")", 1}, {"Dbar(" + y + "," + x + ")", 1}, {"Ebar(" + x + "," + y + ")", 1}});
  }
  t.add_face("Rbar(p)", {{"Ebar(p,p)", 1}, {"Ebar(p,p')", 1}, {"Ebar(p,p')", 1}});
  t.add_face("Rbar(p')", {{"Ebar(p',p)", 1}, {"Ebar(p',p'')", 1}, {"Ebar(p',p'')", 1}});
  t.add_face("Rbar(p'')", {{"Ebar(p'',p')", 1}, {"Ebar(p'',p'')", 1}, {"Ebar(p'',p'')", 1}});
  return t;
}

}  // namespace btq::central_fiber
