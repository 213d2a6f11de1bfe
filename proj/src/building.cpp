#include "btq/building.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace btq::building {

namespace {

Int power(unsigned p, unsigned e) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, e);
  return out;
}

// Valuation of a nonzero integer.
unsigned valuation(const Int& x, unsigned p) {
  if (x == 0) throw std::logic_error("valuation of zero");
  Int y = abs(x);
  unsigned v = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), p)) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long valuation(const Rat& x, unsigned p) {
  return static_cast<long>(valuation(x.get_num(), p)) - static_cast<long>(valuation(x.get_den(), p));
}

template <typename T>
T det3(const Matrix3<T>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

RatMatrix3 to_rational(const IntMatrix3& m) {
  RatMatrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = m[i][j];
  }
  return out;
}

RatMatrix3 inverse(const RatMatrix3& m) {
  const Rat d = det3(m);
  if (d == 0) throw BuildingError("singular matrix");
  RatMatrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j,i)
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      out[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / d;
    }
  }
  return out;
}

template <typename T>
Matrix3<T> multiply(const Matrix3<T>& a, const Matrix3<T>& b) {
  Matrix3<T> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      T s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      out[i][j] = s;
    }
  }
  return out;
}

Int mod_nonneg(const Int& x, const Int& n) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  return r;
}

// A neighbour together with the direction of the edge as seen from the
// source vertex: outgoing when the source has the 1-dimensional quotient.
struct DirectedNeighbor {
  LatticeVertex vertex;
  bool outgoing;
};

// Normalized representatives of the nonzero vectors of F_p^3 up to scaling.
std::vector<std::array<unsigned, 3>> projective_points(unsigned p) {
  std::vector<std::array<unsigned, 3>> out;
  for (unsigned b = 0; b < p; ++b) {
    for (unsigned c = 0; c < p; ++c) out.push_back({1, b, c});
  }
  for (unsigned c = 0; c < p; ++c) out.push_back({0, 1, c});
  out.push_back({0, 0, 1});
  return out;
}

std::vector<DirectedNeighbor> directed_neighbors(const LatticeVertex& v) {
  const unsigned p = v.p();
  const IntMatrix3& h = v.hnf();
  std::vector<DirectedNeighbor> out;
  for (const auto& w : projective_points(p)) {
    const int k = w[0] != 0 ? 0 : w[1] != 0 ? 1 : 2;
    // Sublattice pL + <w>: basis w, p e_i, p e_j with i, j != k.
    IntMatrix3 basis{};
    for (int r = 0; r < 3; ++r) basis[r][0] = w[r];
    int col = 1;
    for (int i = 0; i < 3; ++i) {
      if (i == k) continue;
      basis[i][col++] = p;
    }
    out.push_back({canonicalize(multiply(h, basis), p), false});

    // Sublattice ker(phi) + pL with phi = w read as a functional.
    IntMatrix3 kbasis{};
    col = 0;
    for (int i = 0; i < 3; ++i) {
      if (i == k) continue;
      kbasis[i][col] = 1;
      kbasis[k][col] = Int(p) - Int(w[i]);
      ++col;
    }
    kbasis[k][2] = p;
    out.push_back({canonicalize(multiply(h, kbasis), p), true});
  }
  return out;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

LatticeVertex LatticeVertex::standard(unsigned p) {
  IntMatrix3 id{};
  for (int i = 0; i < 3; ++i) id[i][i] = 1;
  return canonicalize(id, p);
}

bool LatticeVertex::operator==(const LatticeVertex& o) const {
  return p_ == o.p_ && hnf_ == o.hnf_;
}

bool LatticeVertex::operator<(const LatticeVertex& o) const {
  if (p_ != o.p_) return p_ < o.p_;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (const int c = cmp(hnf_[i][j], o.hnf_[i][j]); c != 0) return c < 0;
    }
  }
  return false;
}

std::string LatticeVertex::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    if (i) os << "; ";
    os << hnf_[i][0] << " " << hnf_[i][1] << " " << hnf_[i][2];
  }
  os << "]";
  return os.str();
}

LatticeVertex canonicalize(const RatMatrix3& generators, unsigned p) {
  if (!is_prime(p)) throw BuildingError("p must be prime");
  if (det3(generators) == 0) throw BuildingError("singular matrix");

  // Scale so every entry is p-integral and some entry is a unit.
  long min_val = 0;
  bool first = true;
  for (const auto& row : generators) {
    for (const auto& x : row) {
      Int den = x.get_den();
      while (mpz_divisible_ui_p(den.get_mpz_t(), p)) mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
      if (den != 1) throw BuildingError("denominator has a prime factor other than p");
      if (x == 0) continue;
      const long v = valuation(x, p);
      if (first || v < min_val) min_val = v;
      first = false;
    }
  }
  IntMatrix3 a;
  const Int scale = power(p, static_cast<unsigned>(std::labs(min_val)));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Rat y = generators[i][j];
      if (min_val > 0) y /= scale;
      if (min_val < 0) y *= scale;
      y.canonicalize();
      if (y.get_den() != 1) throw std::logic_error("scaled lattice is not integral");
      a[i][j] = y.get_num();
    }
  }

  // With v = v_p(det), the Z-lattice M spanned by the columns and p^v Z^3
  // has p-power index and M (x) Z_p is our lattice, so the integer Hermite
  // form of M is canonical.
  const unsigned v = valuation(det3(a), p);
  const Int n = power(p, v);
  std::vector<std::array<Int, 3>> pool;
  for (int j = 0; j < 3; ++j) pool.push_back({a[0][j], a[1][j], a[2][j]});
  for (int i = 0; i < 3; ++i) {
    std::array<Int, 3> col{0, 0, 0};
    col[i] = n;
    pool.push_back(col);
  }
  std::array<unsigned, 3> exps{};
  for (int r = 2; r >= 0; --r) {
    // Euclid on row r until a single column is nonzero there.
    while (true) {
      std::size_t best = pool.size();
      for (std::size_t c = 0; c < pool.size(); ++c) {
        if (pool[c][r] == 0) continue;
        if (best == pool.size() || cmp(abs(pool[c][r]), abs(pool[best][r])) < 0) best = c;
      }
      bool done = true;
      for (std::size_t c = 0; c < pool.size(); ++c) {
        if (c == best || pool[c][r] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), pool[c][r].get_mpz_t(), pool[best][r].get_mpz_t());
        for (int i = 0; i <= r; ++i) pool[c][i] -= q * pool[best][i];
        if (pool[c][r] != 0) done = false;
      }
      if (done) {
        auto col = pool[best];
        if (col[r] < 0) {
          for (auto& x : col) x = -x;
        }
        for (int i = 0; i < 3; ++i) a[i][r] = col[i];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
    }
    exps[r] = valuation(a[r][r], p);
    if (a[r][r] != power(p, exps[r])) throw std::logic_error("HNF pivot is not a power of p");
    for (int i = 0; i < 3; ++i) a[i][r] = mod_nonneg(a[i][r], n);
    a[r][r] = power(p, exps[r]);
  }
  if (exps[0] + exps[1] + exps[2] != v) throw std::logic_error("HNF diagonal does not match det valuation");

  for (int j = 1; j < 3; ++j) {
    for (int i = j - 1; i >= 0; --i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[i][i].get_mpz_t());
      for (int k = 0; k <= i; ++k) a[k][j] -= q * a[k][i];
    }
  }

  LatticeVertex out;
  out.p_ = p;
  out.hnf_ = a;
  out.exps_ = exps;
  return out;
}

LatticeVertex canonicalize(const IntMatrix3& generators, unsigned p) {
  return canonicalize(to_rational(generators), p);
}

std::vector<LatticeVertex> neighbors(const LatticeVertex& v) {
  std::vector<LatticeVertex> out;
  for (auto& n : directed_neighbors(v)) out.push_back(std::move(n.vertex));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Codimension of (scaled) v inside u when they are adjacent, 0 otherwise.
unsigned relative_codim(const LatticeVertex& u, const LatticeVertex& v) {
  if (u.p() != v.p()) throw BuildingError("vertices over different primes");
  const unsigned p = u.p();
  RatMatrix3 m = multiply(inverse(to_rational(u.hnf())), to_rational(v.hnf()));
  long min_val = 0;
  bool first = true;
  for (const auto& row : m) {
    for (const auto& x : row) {
      if (x == 0) continue;
      const long val = valuation(x, p);
      if (first || val < min_val) min_val = val;
      first = false;
    }
  }
  const Int scale = power(p, static_cast<unsigned>(std::labs(min_val)));
  for (auto& row : m) {
    for (auto& x : row) {
      if (min_val > 0) x /= scale;
      if (min_val < 0) x *= scale;
    }
  }
  const long d = valuation(det3(m), p);
  if (d != 1 && d != 2) return 0;
  RatMatrix3 back = inverse(m);
  for (auto& row : back) {
    for (auto& x : row) {
      if (x == 0) continue;
      if (valuation(x * Rat(p), p) < 0) return 0;
    }
  }
  return static_cast<unsigned>(d);
}

}  // namespace

bool adjacent(const LatticeVertex& u, const LatticeVertex& v) { return relative_codim(u, v) != 0; }

OrientedEdge orient(const LatticeVertex& u, const LatticeVertex& v) {
  const unsigned d = relative_codim(u, v);
  if (d == 0) throw BuildingError("vertices are not adjacent");
  if (d == 1) return {u, v, 1};
  return {v, u, 1};
}

int vertex_type(const LatticeVertex& v) {
  const auto e = v.diagonal_exponents();
  return static_cast<int>((e[0] + e[1] + e[2]) % 3);
}

std::size_t BuildingBall::index_of(const LatticeVertex& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw BuildingError("vertex not in ball: " + v.to_string());
  return it->second;
}

bool BuildingBall::contains(const LatticeVertex& v) const { return index_.contains(v); }

EdgeIndex BuildingBall::edge_between(std::size_t a, std::size_t b) const {
  auto it = edge_lookup_.find({std::min(a, b), std::max(a, b)});
  if (it == edge_lookup_.end()) throw BuildingError("vertices are not adjacent");
  return it->second;
}

BuildingBall ball(unsigned p, unsigned radius, unsigned radius_cap) {
  if (!is_prime(p)) throw BuildingError("p must be prime");
  if (radius > radius_cap) throw BuildingError("ball too large");

  std::map<LatticeVertex, unsigned> dist;
  std::map<LatticeVertex, std::vector<DirectedNeighbor>> nbrs;
  const LatticeVertex origin = LatticeVertex::standard(p);
  dist.emplace(origin, 0);
  std::vector<LatticeVertex> frontier{origin};
  for (unsigned r = 0; r <= radius; ++r) {
    std::set<LatticeVertex> next;
    for (const auto& v : frontier) {
      auto dn = directed_neighbors(v);
      if (r < radius) {
        for (const auto& n : dn) {
          if (!dist.contains(n.vertex)) next.insert(n.vertex);
        }
      }
      nbrs.emplace(v, std::move(dn));
    }
    for (const auto& v : next) dist.emplace(v, r + 1);
    frontier.assign(next.begin(), next.end());
  }

  BuildingBall b;
  b.p = p;
  b.radius = radius;
  for (const auto& [v, d] : dist) {
    b.index_.emplace(v, b.vertices.size());
    b.vertices.push_back(v);
    b.distance.push_back(d);
  }
  b.adjacency.resize(b.vertices.size());
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    for (const auto& n : nbrs.at(b.vertices[i])) {
      auto it = b.index_.find(n.vertex);
      if (it == b.index_.end()) continue;
      const std::size_t j = it->second;
      b.adjacency[i].push_back(j);
      const EdgeIndex e = n.outgoing ? EdgeIndex{i, j} : EdgeIndex{j, i};
      auto [pos, inserted] = b.edge_lookup_.emplace(std::pair{std::min(i, j), std::max(i, j)}, e);
      if (!inserted && pos->second != e) throw std::logic_error("inconsistent edge orientation");
    }
    std::sort(b.adjacency[i].begin(), b.adjacency[i].end());
  }
  for (const auto& [key, e] : b.edge_lookup_) b.edges.push_back(e);
  std::sort(b.edges.begin(), b.edges.end());

  for (std::size_t a = 0; a < b.vertices.size(); ++a) {
    for (auto c1 : b.adjacency[a]) {
      if (c1 <= a) continue;
      for (auto c2 : b.adjacency[c1]) {
        if (c2 <= c1) continue;
        if (std::binary_search(b.adjacency[a].begin(), b.adjacency[a].end(), c2)) {
          b.triangles.push_back({a, c1, c2});
        }
      }
    }
  }
  return b;
}

bool is_oriented_circuit(const std::array<OrientedEdge, 3>& edges) {
  // Each vertex must occur exactly once as a source and once as a target.
  for (const auto& e : edges) {
    int as_src = 0, as_dst = 0;
    for (const auto& f : edges) {
      as_src += (f.src == e.src);
      as_dst += (f.dst == e.src);
    }
    if (as_src != 1 || as_dst != 1) return false;
  }
  return true;
}

bool triangle_is_circuit(const Triangle& t, const BuildingBall& b) {
  const std::array<OrientedEdge, 3> edges{b.oriented_edge(b.edge_between(t[0], t[1])),
                                          b.oriented_edge(b.edge_between(t[1], t[2])),
                                          b.oriented_edge(b.edge_between(t[0], t[2]))};
  return is_oriented_circuit(edges);
}

std::string to_dot(const BuildingBall& b) {
  static constexpr const char* kColors[] = {"lightblue", "lightpink", "palegreen"};
  std::ostringstream os;
  os << "digraph building {\n";
  os << "  // p=" << b.p << " radius=" << b.radius << "\n";
  os << "  node [shape=circle, style=filled];\n";
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    const int t = vertex_type(b.vertices[i]);
    os << "  v" << i << " [label=\"" << t << "\", fillcolor=" << kColors[t] << ", tooltip=\""
       << b.vertices[i].to_string() << "\"];\n";
  }
  for (const auto& e : b.edges) os << "  v" << e.src << " -> v" << e.dst << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const BuildingBall& b) {
  auto entry = [](const Int& x) -> nlohmann::json {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
  };
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : b.vertices) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& r : v.hnf()) {
      for (const auto& x : r) row.push_back(entry(x));
    }
    verts.push_back(row);
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : b.edges) edges.push_back({e.src, e.dst});
  nlohmann::json tris = nlohmann::json::array();
  for (const auto& t : b.triangles) tris.push_back({t[0], t[1], t[2]});
  return {{"p", b.p}, {"radius", b.radius}, {"vertices", verts}, {"edges", edges}, {"triangles", tris}};
}

}  // namespace btq::building
