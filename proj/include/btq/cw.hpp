#pragma once

// Labeled 2-dimensional CW complexes, finite group actions on them and
// quotients by such actions.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace btq::cw {

class CwError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// +edge traverses src -> dst, -edge the reverse.
struct SignedEdge {
  std::size_t edge = 0;
  int sign = 1;

  SignedEdge inverse() const { return {edge, -sign}; }
  auto operator<=>(const SignedEdge&) const = default;
};

using BoundaryWord = std::vector<SignedEdge>;

struct Edge {
  std::string label;
  std::size_t src = 0;
  std::size_t dst = 0;
};

struct Face {
  std::string label;
  BoundaryWord boundary;
};

struct Complex {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;

  std::size_t add_vertex(std::string label);
  /// Throws CwError on an unknown endpoint label.
  std::size_t add_edge(std::string label, const std::string& src, const std::string& dst);
  /// Word entries are (edge label, +1/-1).
  std::size_t add_face(std::string label, const std::vector<std::pair<std::string, int>>& word);

  std::optional<std::size_t> find_vertex(const std::string& label) const;
  std::optional<std::size_t> find_edge(const std::string& label) const;
  std::optional<std::size_t> find_face(const std::string& label) const;
  std::size_t vertex_index(const std::string& label) const;
  std::size_t edge_index(const std::string& label) const;
  std::size_t face_index(const std::string& label) const;

  /// Start and end vertex of a signed edge.
  std::size_t tail(SignedEdge e) const { return e.sign > 0 ? edges[e.edge].src : edges[e.edge].dst; }
  std::size_t head(SignedEdge e) const { return e.sign > 0 ? edges[e.edge].dst : edges[e.edge].src; }

  long euler_characteristic() const {
    return static_cast<long>(vertices.size()) - static_cast<long>(edges.size()) +
           static_cast<long>(faces.size());
  }
};

struct Certificate {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long euler_characteristic = 0;
};

/// Checks label uniqueness, edge endpoints and closure of every boundary
/// word. Throws CwError describing the first problem.
Certificate validate(const Complex& c);

BoundaryWord inverse_word(const BoundaryWord& w);

// --- group actions ---------------------------------------------------------

/// A finite group given by its multiplication table.
struct FiniteGroup {
  std::size_t order = 1;
  std::size_t identity = 0;
  std::vector<std::size_t> table{0};  // row-major order x order

  std::size_t multiply(std::size_t a, std::size_t b) const { return table[a * order + b]; }
  static FiniteGroup trivial() { return {}; }
  /// Verifies associativity, identity and inverses.
  bool is_group() const;
};

/// Where a face goes and how its boundary word lines up with the target's:
/// image[i] == target[(i + rotation) % k], or the same against the inverse
/// of the target word when `reversed` is set.
struct FaceImage {
  std::size_t face = 0;
  std::size_t rotation = 0;
  bool reversed = false;
  auto operator<=>(const FaceImage&) const = default;
};

struct CellPermutation {
  std::vector<std::size_t> vertex;
  std::vector<SignedEdge> edge;
  std::vector<FaceImage> face;
};

struct CellAction {
  FiniteGroup group;
  std::vector<CellPermutation> elements;  // indexed like the group
};

/// Image of a boundary word under an edge permutation.
BoundaryWord map_word(const BoundaryWord& w, const std::vector<SignedEdge>& edge_map);

/// All alignments of `image` against the boundary of `target`, smallest
/// rotation first, forward before reversed.
std::vector<FaceImage> alignments(const Complex& c, const BoundaryWord& image, std::size_t target);

/// Builds a permutation from vertex/edge/face images, filling in the face
/// alignment. Throws CwError naming the face when no alignment exists.
CellPermutation make_permutation(const Complex& c, std::vector<std::size_t> vertex,
                                 std::vector<SignedEdge> edge, const std::vector<std::size_t>& face);

CellPermutation identity_permutation(const Complex& c);

/// Throws CwError unless every element respects incidence and the
/// assignment is a homomorphism.
void validate_action(const Complex& c, const CellAction& a);

/// Restriction to the group elements listed in `members`; the multiplication
/// table is re-indexed accordingly. `members` must be closed.
CellAction restrict_action(const CellAction& a, const std::vector<std::size_t>& members);

struct FixityViolation {
  std::size_t element = 0;
  int dimension = 0;
  std::size_t cell = 0;
  std::string reason;
};

std::vector<FixityViolation> fixity_violations(const Complex& c, const CellAction& a);
/// Every cell fixed setwise by an element is fixed pointwise.
bool check_pointwise_fixity(const Complex& c, const CellAction& a);

struct OrbitMap {
  std::vector<std::size_t> vertex;
  std::vector<SignedEdge> edge;  // orbit edge and sign relative to its representative
  std::vector<std::size_t> face;
};

struct QuotientResult {
  Complex complex;
  OrbitMap map;
};

/// One cell per orbit, labelled "orbit:<least member label>".
QuotientResult quotient(const Complex& c, const CellAction& a);

/// Orbits of each dimension as sorted index lists, sorted by least member.
struct CellOrbits {
  std::vector<std::vector<std::size_t>> vertices;
  std::vector<std::vector<std::size_t>> edges;
  std::vector<std::vector<std::size_t>> faces;
};
CellOrbits cell_orbits(const Complex& c, const CellAction& a);

// --- comparison ------------------------------------------------------------

/// Labels of c1 mapped to labels of c2; an entry applies to every dimension
/// in which the c1 label occurs.
using LabelDictionary = std::map<std::string, std::string>;

/// Exhaustive search for a cell bijection extending the dictionary that
/// preserves incidence, with edges allowed to flip orientation and faces
/// matched up to rotation and inversion of their boundary words.
bool isomorphic_labeled(const Complex& c1, const Complex& c2, const LabelDictionary& dictionary = {});

/// The complex with every label passed through the dictionary (labels not
/// in it are kept).
Complex relabel(const Complex& c, const LabelDictionary& dictionary);

/// Splits an edge into two edges through a new midpoint vertex.
Complex subdivide_edge(const Complex& c, const std::string& edge_label);

// --- serialization ---------------------------------------------------------

/// One cell per line: `V <label>`, `E <label> <src> <dst>`, `F <label> <+e> <-f> ...`.
std::string to_text(const Complex& c);
Complex from_text(const std::string& text);

nlohmann::json to_json(const Complex& c);
Complex complex_from_json(const nlohmann::json& j);

}  // namespace btq::cw
