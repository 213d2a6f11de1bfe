#include "btq/cw.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace btq::cw {

namespace {

template <typename Cells, typename Label>
std::optional<std::size_t> find_label(const Cells& cells, const std::string& label, Label get) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (get(cells[i]) == label) return i;
  }
  return std::nullopt;
}

BoundaryWord rotate(const BoundaryWord& w, std::size_t r) {
  BoundaryWord out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + r) % w.size()];
  return out;
}

// Least rotation of the word or of its inverse.
BoundaryWord canonical_cyclic(const BoundaryWord& w) {
  BoundaryWord best = w;
  const BoundaryWord inv = inverse_word(w);
  for (std::size_t r = 0; r < w.size(); ++r) {
    best = std::min({best, rotate(w, r), rotate(inv, r)});
  }
  return best;
}

}  // namespace

std::size_t Complex::add_vertex(std::string label) {
  if (find_vertex(label)) throw CwError("duplicate vertex label " + label);
  vertices.push_back(std::move(label));
  return vertices.size() - 1;
}

std::size_t Complex::add_edge(std::string label, const std::string& src, const std::string& dst) {
  if (find_edge(label)) throw CwError("duplicate edge label " + label);
  const auto s = find_vertex(src);
  const auto d = find_vertex(dst);
  if (!s || !d) throw CwError("dangling edge endpoint in edge " + label);
  edges.push_back({std::move(label), *s, *d});
  return edges.size() - 1;
}

std::size_t Complex::add_face(std::string label, const std::vector<std::pair<std::string, int>>& word) {
  if (find_face(label)) throw CwError("duplicate face label " + label);
  BoundaryWord w;
  for (const auto& [e, sign] : word) {
    const auto idx = find_edge(e);
    if (!idx) throw CwError("face " + label + " uses unknown edge " + e);
    if (sign != 1 && sign != -1) throw CwError("face " + label + " has a bad sign");
    w.push_back({*idx, sign});
  }
  faces.push_back({std::move(label), std::move(w)});
  return faces.size() - 1;
}

std::optional<std::size_t> Complex::find_vertex(const std::string& label) const {
  return find_label(vertices, label, [](const std::string& s) -> const std::string& { return s; });
}
std::optional<std::size_t> Complex::find_edge(const std::string& label) const {
  return find_label(edges, label, [](const Edge& e) -> const std::string& { return e.label; });
}
std::optional<std::size_t> Complex::find_face(const std::string& label) const {
  return find_label(faces, label, [](const Face& f) -> const std::string& { return f.label; });
}

std::size_t Complex::vertex_index(const std::string& label) const {
  if (auto i = find_vertex(label)) return *i;
  throw CwError("no vertex " + label);
}
std::size_t Complex::edge_index(const std::string& label) const {
  if (auto i = find_edge(label)) return *i;
  throw CwError("no edge " + label);
}
std::size_t Complex::face_index(const std::string& label) const {
  if (auto i = find_face(label)) return *i;
  throw CwError("no face " + label);
}

Certificate validate(const Complex& c) {
  auto check_unique = [](std::vector<std::string> labels, const char* what) {
    std::sort(labels.begin(), labels.end());
    auto dup = std::adjacent_find(labels.begin(), labels.end());
    if (dup != labels.end()) throw CwError(std::string("duplicate ") + what + " label " + *dup);
  };
  check_unique(c.vertices, "vertex");
  std::vector<std::string> labels;
  for (const auto& e : c.edges) labels.push_back(e.label);
  check_unique(labels, "edge");
  labels.clear();
  for (const auto& f : c.faces) labels.push_back(f.label);
  check_unique(labels, "face");

  for (const auto& e : c.edges) {
    if (e.src >= c.vertices.size() || e.dst >= c.vertices.size()) {
      throw CwError("dangling edge endpoint in edge " + e.label);
    }
  }
  for (const auto& f : c.faces) {
    if (f.boundary.empty()) throw CwError("empty boundary word in face " + f.label);
    for (const auto& s : f.boundary) {
      if (s.edge >= c.edges.size() || (s.sign != 1 && s.sign != -1)) {
        throw CwError("bad boundary entry in face " + f.label);
      }
    }
    for (std::size_t i = 0; i < f.boundary.size(); ++i) {
      const auto& cur = f.boundary[i];
      const auto& nxt = f.boundary[(i + 1) % f.boundary.size()];
      if (c.head(cur) != c.tail(nxt)) throw CwError("open boundary word in face " + f.label);
    }
  }
  return {c.vertices.size(), c.edges.size(), c.faces.size(), c.euler_characteristic()};
}

BoundaryWord inverse_word(const BoundaryWord& w) {
  BoundaryWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

bool FiniteGroup::is_group() const {
  if (table.size() != order * order || identity >= order) return false;
  for (std::size_t a = 0; a < order; ++a) {
    if (multiply(identity, a) != a || multiply(a, identity) != a) return false;
    bool has_inverse = false;
    for (std::size_t b = 0; b < order; ++b) has_inverse = has_inverse || multiply(a, b) == identity;
    if (!has_inverse) return false;
  }
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t c = 0; c < order; ++c) {
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) return false;
      }
    }
  }
  return true;
}

BoundaryWord map_word(const BoundaryWord& w, const std::vector<SignedEdge>& edge_map) {
  BoundaryWord out;
  out.reserve(w.size());
  for (const auto& s : w) {
    const SignedEdge img = edge_map.at(s.edge);
    out.push_back({img.edge, img.sign * s.sign});
  }
  return out;
}

std::vector<FaceImage> alignments(const Complex& c, const BoundaryWord& image, std::size_t target) {
  std::vector<FaceImage> out;
  const BoundaryWord& t = c.faces.at(target).boundary;
  if (t.size() != image.size()) return out;
  const BoundaryWord inv = inverse_word(t);
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (rotate(t, r) == image) out.push_back({target, r, false});
  }
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (rotate(inv, r) == image) out.push_back({target, r, true});
  }
  std::stable_sort(out.begin(), out.end(), [](const FaceImage& a, const FaceImage& b) {
    return std::pair(a.rotation, a.reversed) < std::pair(b.rotation, b.reversed);
  });
  return out;
}

CellPermutation make_permutation(const Complex& c, std::vector<std::size_t> vertex,
                                 std::vector<SignedEdge> edge, const std::vector<std::size_t>& face) {
  CellPermutation out{std::move(vertex), std::move(edge), {}};
  out.face.reserve(face.size());
  for (std::size_t f = 0; f < c.faces.size(); ++f) {
    const BoundaryWord img = map_word(c.faces[f].boundary, out.edge);
    const auto al = alignments(c, img, face.at(f));
    if (al.empty()) {
      throw CwError("boundary misalignment: face " + c.faces[f].label + " -> " + c.faces[face[f]].label);
    }
    out.face.push_back(al.front());
  }
  return out;
}

CellPermutation identity_permutation(const Complex& c) {
  CellPermutation out;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) out.vertex.push_back(v);
  for (std::size_t e = 0; e < c.edges.size(); ++e) out.edge.push_back({e, 1});
  for (std::size_t f = 0; f < c.faces.size(); ++f) out.face.push_back({f, 0, false});
  return out;
}

void validate_action(const Complex& c, const CellAction& a) {
  const auto& G = a.group;
  if (G.table.size() != G.order * G.order) throw CwError("multiplication table has wrong size");
  if (a.elements.size() != G.order) throw CwError("action has wrong number of elements");
  const std::size_t nv = c.vertices.size(), ne = c.edges.size(), nf = c.faces.size();

  for (std::size_t g = 0; g < G.order; ++g) {
    const auto& pg = a.elements[g];
    const std::string who = "group element " + std::to_string(g);
    if (pg.vertex.size() != nv || pg.edge.size() != ne || pg.face.size() != nf) {
      throw CwError(who + ": permutation has wrong size");
    }
    std::vector<bool> hit_v(nv), hit_e(ne), hit_f(nf);
    for (auto v : pg.vertex) {
      if (v >= nv || hit_v[v]) throw CwError(who + ": vertex map is not a bijection");
      hit_v[v] = true;
    }
    for (std::size_t e = 0; e < ne; ++e) {
      const auto img = pg.edge[e];
      if (img.edge >= ne || hit_e[img.edge] || (img.sign != 1 && img.sign != -1)) {
        throw CwError(who + ": edge map is not a signed bijection");
      }
      hit_e[img.edge] = true;
      const auto& src = c.edges[e];
      const std::size_t s = pg.vertex[src.src], d = pg.vertex[src.dst];
      if (c.tail(img) != s || c.head(img) != d) {
        throw CwError(who + ": edge " + src.label + " does not map endpoints to endpoints");
      }
    }
    for (std::size_t f = 0; f < nf; ++f) {
      const auto img = pg.face[f];
      if (img.face >= nf || hit_f[img.face]) throw CwError(who + ": face map is not a bijection");
      hit_f[img.face] = true;
      const BoundaryWord w = map_word(c.faces[f].boundary, pg.edge);
      const BoundaryWord& t = c.faces[img.face].boundary;
      if (t.size() != w.size() || img.rotation >= t.size() ||
          rotate(img.reversed ? inverse_word(t) : t, img.rotation) != w) {
        throw CwError(who + ": boundary misalignment for face " + c.faces[f].label);
      }
    }
  }

  const auto& id = a.elements[G.identity];
  for (std::size_t v = 0; v < nv; ++v) {
    if (id.vertex[v] != v) throw CwError("identity moves a vertex");
  }
  for (std::size_t e = 0; e < ne; ++e) {
    if (id.edge[e] != SignedEdge{e, 1}) throw CwError("identity moves an edge");
  }
  for (std::size_t f = 0; f < nf; ++f) {
    if (id.face[f].face != f) throw CwError("identity moves a face");
  }

  for (std::size_t g = 0; g < G.order; ++g) {
    for (std::size_t h = 0; h < G.order; ++h) {
      const auto& pg = a.elements[g];
      const auto& ph = a.elements[h];
      const auto& pgh = a.elements[G.multiply(g, h)];
      for (std::size_t v = 0; v < nv; ++v) {
        if (pgh.vertex[v] != pg.vertex[ph.vertex[v]]) throw CwError("vertex action is not a homomorphism");
      }
      for (std::size_t e = 0; e < ne; ++e) {
        const auto once = ph.edge[e];
        const auto twice = pg.edge[once.edge];
        if (pgh.edge[e] != SignedEdge{twice.edge, twice.sign * once.sign}) {
          throw CwError("edge action is not a homomorphism");
        }
      }
      for (std::size_t f = 0; f < nf; ++f) {
        if (pgh.face[f].face != pg.face[ph.face[f].face].face) throw CwError("face action is not a homomorphism");
      }
    }
  }
}

CellAction restrict_action(const CellAction& a, const std::vector<std::size_t>& members) {
  std::vector<std::size_t> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto pos = [&](std::size_t g) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), g);
    if (it == sorted.end() || *it != g) throw CwError("subset is not closed under multiplication");
    return static_cast<std::size_t>(it - sorted.begin());
  };
  CellAction out;
  out.group.order = sorted.size();
  out.group.identity = pos(a.group.identity);
  out.group.table.resize(sorted.size() * sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      out.group.table[i * sorted.size() + j] = pos(a.group.multiply(sorted[i], sorted[j]));
    }
    out.elements.push_back(a.elements.at(sorted[i]));
  }
  return out;
}

std::vector<FixityViolation> fixity_violations(const Complex& c, const CellAction& a) {
  std::vector<FixityViolation> out;
  for (std::size_t g = 0; g < a.elements.size(); ++g) {
    const auto& pg = a.elements[g];
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
      if (pg.edge[e].edge == e && pg.edge[e].sign < 0) out.push_back({g, 1, e, "edge reversed"});
    }
    for (std::size_t f = 0; f < c.faces.size(); ++f) {
      const auto& img = pg.face[f];
      if (img.face != f) continue;
      if (img.reversed) {
        out.push_back({g, 2, f, "face boundary reversed"});
      } else if (img.rotation != 0) {
        out.push_back({g, 2, f, "face boundary rotated by " + std::to_string(img.rotation)});
      }
    }
  }
  return out;
}

bool check_pointwise_fixity(const Complex& c, const CellAction& a) { return fixity_violations(c, a).empty(); }

CellOrbits cell_orbits(const Complex& c, const CellAction& a) {
  auto orbits_of = [&](std::size_t n, const std::function<std::size_t(const CellPermutation&, std::size_t)>& img) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> done(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (done[x]) continue;
      std::set<std::size_t> orbit;
      for (const auto& pg : a.elements) orbit.insert(img(pg, x));
      for (auto y : orbit) done[y] = true;
      out.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
  };
  CellOrbits out;
  out.vertices = orbits_of(c.vertices.size(), [](const CellPermutation& p, std::size_t x) { return p.vertex[x]; });
  out.edges = orbits_of(c.edges.size(), [](const CellPermutation& p, std::size_t x) { return p.edge[x].edge; });
  out.faces = orbits_of(c.faces.size(), [](const CellPermutation& p, std::size_t x) { return p.face[x].face; });
  return out;
}

QuotientResult quotient(const Complex& c, const CellAction& a) {
  if (!check_pointwise_fixity(c, a)) throw CwError("quotient is not a CW complex cell-for-orbit");
  const CellOrbits orb = cell_orbits(c, a);

  // Representative = member with least label; orbits ordered by that label.
  auto order_orbits = [](std::vector<std::vector<std::size_t>> orbits, auto label_of) {
    std::vector<std::pair<std::string, std::vector<std::size_t>>> out;
    for (auto& o : orbits) {
      std::size_t rep = o.front();
      for (auto x : o) {
        if (label_of(x) < label_of(rep)) rep = x;
      }
      std::stable_partition(o.begin(), o.end(), [&](std::size_t x) { return x == rep; });
      out.emplace_back(label_of(rep), std::move(o));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto vorb = order_orbits(orb.vertices, [&](std::size_t x) { return c.vertices[x]; });
  const auto eorb = order_orbits(orb.edges, [&](std::size_t x) { return c.edges[x].label; });
  const auto forb = order_orbits(orb.faces, [&](std::size_t x) { return c.faces[x].label; });

  QuotientResult out;
  out.map.vertex.resize(c.vertices.size());
  out.map.edge.resize(c.edges.size());
  out.map.face.resize(c.faces.size());

  for (std::size_t i = 0; i < vorb.size(); ++i) {
    out.complex.vertices.push_back("orbit:" + vorb[i].first);
    for (auto x : vorb[i].second) out.map.vertex[x] = i;
  }
  for (std::size_t i = 0; i < eorb.size(); ++i) {
    const std::size_t rep = eorb[i].second.front();
    for (const auto& pg : a.elements) {
      const auto img = pg.edge[rep];
      out.map.edge[img.edge] = {i, img.sign};
    }
    const auto& e = c.edges[rep];
    out.complex.edges.push_back({"orbit:" + eorb[i].first, out.map.vertex[e.src], out.map.vertex[e.dst]});
  }
  for (std::size_t i = 0; i < forb.size(); ++i) {
    const std::size_t rep = forb[i].second.front();
    for (auto x : forb[i].second) out.map.face[x] = i;
    BoundaryWord w;
    for (const auto& s : c.faces[rep].boundary) {
      const auto m = out.map.edge[s.edge];
      w.push_back({m.edge, m.sign * s.sign});
    }
    out.complex.faces.push_back({"orbit:" + forb[i].first, std::move(w)});
  }
  validate(out.complex);
  return out;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Complex& a, const Complex& b, const LabelDictionary& dict) : a_(a), b_(b) {
    fixed_v_.assign(a.vertices.size(), npos);
    fixed_e_.assign(a.edges.size(), npos);
    fixed_f_.assign(a.faces.size(), npos);
    for (const auto& [from, to] : dict) {
      bool used = false;
      if (auto i = a.find_vertex(from)) {
        auto j = b.find_vertex(to);
        if (!j) ok_ = false;
        else fixed_v_[*i] = *j;
        used = true;
      }
      if (auto i = a.find_edge(from)) {
        auto j = b.find_edge(to);
        if (!j) ok_ = false;
        else fixed_e_[*i] = *j;
        used = true;
      }
      if (auto i = a.find_face(from)) {
        auto j = b.find_face(to);
        if (!j) ok_ = false;
        else fixed_f_[*i] = *j;
        used = true;
      }
      if (!used) ok_ = false;
    }
    // Faces complete after each edge position.
    completes_at_.resize(a.edges.size());
    for (std::size_t f = 0; f < a.faces.size(); ++f) {
      std::size_t last = 0;
      for (const auto& s : a.faces[f].boundary) last = std::max(last, s.edge);
      if (!a.faces[f].boundary.empty()) completes_at_[last].push_back(f);
    }
    for (const auto& f : b.faces) ++remaining_[canonical_cyclic(f.boundary)];
    for (std::size_t f = 0; f < a.faces.size(); ++f) {
      if (fixed_f_[f] != npos) --remaining_[canonical_cyclic(b.faces[fixed_f_[f]].boundary)];
    }
    for (const auto& [w, n] : remaining_) {
      if (n < 0) ok_ = false;
    }
  }

  bool run() {
    if (!ok_) return false;
    if (a_.vertices.size() != b_.vertices.size() || a_.edges.size() != b_.edges.size() ||
        a_.faces.size() != b_.faces.size()) {
      return false;
    }
    vmap_.assign(a_.vertices.size(), npos);
    vused_.assign(b_.vertices.size(), false);
    emap_.assign(a_.edges.size(), SignedEdge{npos, 1});
    eused_.assign(b_.edges.size(), false);
    return assign_vertex(0);
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool assign_vertex(std::size_t v) {
    if (v == a_.vertices.size()) return assign_edge(0);
    for (std::size_t w = 0; w < b_.vertices.size(); ++w) {
      if (vused_[w]) continue;
      if (fixed_v_[v] != npos && fixed_v_[v] != w) continue;
      vmap_[v] = w;
      vused_[w] = true;
      if (assign_vertex(v + 1)) return true;
      vused_[w] = false;
      vmap_[v] = npos;
    }
    return false;
  }

  bool assign_edge(std::size_t e) {
    if (e == a_.edges.size()) return true;
    const auto& ea = a_.edges[e];
    const std::size_t s = vmap_[ea.src], d = vmap_[ea.dst];
    for (std::size_t x = 0; x < b_.edges.size(); ++x) {
      if (eused_[x]) continue;
      if (fixed_e_[e] != npos && fixed_e_[e] != x) continue;
      const auto& eb = b_.edges[x];
      for (int sign : {1, -1}) {
        const bool match = sign > 0 ? (eb.src == s && eb.dst == d) : (eb.dst == s && eb.src == d);
        if (!match) continue;
        emap_[e] = {x, sign};
        eused_[x] = true;
        if (faces_consistent(e) && assign_edge(e + 1)) return true;
        undo_faces(e);
        eused_[x] = false;
        emap_[e] = {npos, 1};
      }
    }
    return false;
  }

  // Faces completed by edge e must land on an available target face.
  bool faces_consistent(std::size_t e) {
    taken_[e].clear();
    for (auto f : completes_at_[e]) {
      const BoundaryWord img = map_word(a_.faces[f].boundary, emap_);
      if (fixed_f_[f] != npos) {
        if (alignments(b_, img, fixed_f_[f]).empty()) return false;
        continue;
      }
      auto it = remaining_.find(canonical_cyclic(img));
      if (it == remaining_.end() || it->second == 0) return false;
      --it->second;
      taken_[e].push_back(it->first);
    }
    return true;
  }

  void undo_faces(std::size_t e) {
    for (const auto& w : taken_[e]) ++remaining_[w];
    taken_[e].clear();
  }

  const Complex& a_;
  const Complex& b_;
  bool ok_ = true;
  std::vector<std::size_t> fixed_v_, fixed_e_, fixed_f_;
  std::vector<std::vector<std::size_t>> completes_at_;
  std::map<BoundaryWord, long> remaining_;
  std::map<std::size_t, std::vector<BoundaryWord>> taken_;
  std::vector<std::size_t> vmap_;
  std::vector<bool> vused_;
  std::vector<SignedEdge> emap_;
  std::vector<bool> eused_;
};

}  // namespace

bool isomorphic_labeled(const Complex& c1, const Complex& c2, const LabelDictionary& dictionary) {
  return IsoSearch(c1, c2, dictionary).run();
}

Complex relabel(const Complex& c, const LabelDictionary& dictionary) {
  auto rename = [&](const std::string& s) {
    auto it = dictionary.find(s);
    return it == dictionary.end() ? s : it->second;
  };
  Complex out = c;
  for (auto& v : out.vertices) v = rename(v);
  for (auto& e : out.edges) e.label = rename(e.label);
  for (auto& f : out.faces) f.label = rename(f.label);
  return out;
}

Complex subdivide_edge(const Complex& c, const std::string& edge_label) {
  const std::size_t e = c.edge_index(edge_label);
  Complex out = c;
  const std::string mid = edge_label + "#mid";
  out.add_vertex(mid);
  const std::size_t m = out.vertices.size() - 1;
  const std::size_t dst = c.edges[e].dst;
  out.edges[e] = {edge_label + "#1", c.edges[e].src, m};
  out.edges.push_back({edge_label + "#2", m, dst});
  const std::size_t e2 = out.edges.size() - 1;
  for (auto& f : out.faces) {
    BoundaryWord w;
    for (const auto& s : f.boundary) {
      if (s.edge != e) {
        w.push_back(s);
      } else if (s.sign > 0) {
        w.push_back({e, 1});
        w.push_back({e2, 1});
      } else {
        w.push_back({e2, -1});
        w.push_back({e, -1});
      }
    }
    f.boundary = std::move(w);
  }
  return out;
}

}  // namespace btq::cw
