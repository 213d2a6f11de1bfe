#pragma once

// Finite balls in the Bruhat-Tits building of PGL_3(Q_p).
//
// A vertex is a homothety class of Z_p-lattices of rank 3. It is stored as
// the column Hermite normal form of a representative that lies in Z_p^3 but
// not in p Z_p^3: upper triangular, diagonal p^{a_i}, and entry (i,j) with
// j > i reduced into [0, p^{a_i}).

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace btq::building {

class BuildingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Int = mpz_class;
using Rat = mpq_class;
template <typename T>
using Matrix3 = std::array<std::array<T, 3>, 3>;
using IntMatrix3 = Matrix3<Int>;
using RatMatrix3 = Matrix3<Rat>;

class LatticeVertex {
 public:
  /// The standard lattice Z_p^3.
  static LatticeVertex standard(unsigned p);

  unsigned p() const { return p_; }
  const IntMatrix3& hnf() const { return hnf_; }
  /// Exponents a_i of the diagonal entries p^{a_i}.
  std::array<unsigned, 3> diagonal_exponents() const { return exps_; }

  bool operator==(const LatticeVertex& o) const;
  bool operator<(const LatticeVertex& o) const;

  std::string to_string() const;

 private:
  friend LatticeVertex canonicalize(const RatMatrix3&, unsigned);
  LatticeVertex() = default;

  unsigned p_ = 2;
  IntMatrix3 hnf_;
  std::array<unsigned, 3> exps_{};
};

bool is_prime(unsigned n);

/// Canonical representative of the class of the lattice spanned by the
/// columns of `generators`.
LatticeVertex canonicalize(const RatMatrix3& generators, unsigned p);
LatticeVertex canonicalize(const IntMatrix3& generators, unsigned p);

/// One neighbour per proper nonzero subspace of L/pL.
std::vector<LatticeVertex> neighbors(const LatticeVertex& v);

struct OrientedEdge {
  LatticeVertex src;
  LatticeVertex dst;
  unsigned codim = 1;
};

/// The edge between adjacent u and v, directed from the lattice whose
/// quotient by the other (suitably scaled) is 1-dimensional.
OrientedEdge orient(const LatticeVertex& u, const LatticeVertex& v);

/// Whether u and v are distinct adjacent vertices.
bool adjacent(const LatticeVertex& u, const LatticeVertex& v);

/// v_p(det hnf) mod 3.
int vertex_type(const LatticeVertex& v);

struct EdgeIndex {
  std::size_t src = 0;
  std::size_t dst = 0;
  auto operator<=>(const EdgeIndex&) const = default;
};

using Triangle = std::array<std::size_t, 3>;  // sorted vertex indices

constexpr unsigned kDefaultRadiusCap = 4;

/// All vertices within graph distance `radius` of the standard lattice,
/// with every edge and triangle among them. Vertices are sorted; edges and
/// triangles index into that list.
struct BuildingBall {
  unsigned p = 2;
  unsigned radius = 0;
  std::vector<LatticeVertex> vertices;
  std::vector<unsigned> distance;  // from the standard lattice
  std::vector<EdgeIndex> edges;    // directed, sorted
  std::vector<Triangle> triangles;
  std::vector<std::vector<std::size_t>> adjacency;  // sorted neighbour indices inside the ball

  std::size_t index_of(const LatticeVertex& v) const;
  bool contains(const LatticeVertex& v) const;
  /// All neighbours of the vertex lie inside the ball.
  bool is_interior(std::size_t v) const { return distance[v] < radius; }
  /// Orientation of the edge between two adjacent ball vertices.
  EdgeIndex edge_between(std::size_t a, std::size_t b) const;
  OrientedEdge oriented_edge(const EdgeIndex& e) const { return {vertices[e.src], vertices[e.dst], 1}; }

 private:
  friend BuildingBall ball(unsigned, unsigned, unsigned);
  std::map<LatticeVertex, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, EdgeIndex> edge_lookup_;
};

BuildingBall ball(unsigned p, unsigned radius, unsigned radius_cap = kDefaultRadiusCap);

/// Whether three oriented edges form a directed 3-cycle.
bool is_oriented_circuit(const std::array<OrientedEdge, 3>& edges);
bool triangle_is_circuit(const Triangle& t, const BuildingBall& b);

std::string to_dot(const BuildingBall& b);
nlohmann::json to_json(const BuildingBall& b);

}  // namespace btq::building
