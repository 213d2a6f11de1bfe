#pragma once

// The projective plane over F_2 together with its extended symmetry group
// GL_3(2) x| <tau> of order 336, where tau is the standard correlation.
//
// Coordinates are 3-bit integers: the vector (a,b,c) is stored as 4a+2b+c,
// so the first coordinate is the most significant bit. The same convention
// is used for the rows of a BitMatrix3.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace btq::fano {

class FanoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Kind : std::uint8_t { Point = 0, Line = 1 };

/// A point or a line of PG(2,2).
struct GeomElement {
  Kind kind = Kind::Point;
  std::uint8_t coords = 1;  // 1..7

  static GeomElement point(unsigned coords);
  static GeomElement line(unsigned coords);

  bool is_point() const { return kind == Kind::Point; }
  bool is_line() const { return kind == Kind::Line; }

  /// Dense index in 0..13: points first, then lines.
  std::size_t index() const { return (kind == Kind::Line ? 7 : 0) + coords - 1; }
  static GeomElement from_index(std::size_t i);

  /// "P3", "L5", ...
  std::string label() const;
  static GeomElement parse(const std::string& label);

  auto operator<=>(const GeomElement&) const = default;
};

/// All 14 elements in index order.
std::span<const GeomElement> all_elements();
std::span<const GeomElement> all_points();
std::span<const GeomElement> all_lines();

bool incident(GeomElement a, GeomElement b);

/// The three elements incident with e, sorted.
std::array<GeomElement, 3> incident_elements(GeomElement e);

struct BitMatrix3 {
  std::array<std::uint8_t, 3> rows{4, 2, 1};

  static BitMatrix3 identity() { return {}; }
  std::uint8_t apply(std::uint8_t v) const;
  BitMatrix3 operator*(const BitMatrix3& o) const;
  BitMatrix3 transpose() const;
  bool invertible() const;
  BitMatrix3 inverse() const;
  bool bit(int r, int c) const { return (rows[r] >> (2 - c)) & 1u; }

  auto operator<=>(const BitMatrix3&) const = default;
};

/// (M, duality). Composition (M,e)(N,d) = (M * phi^e(N), e xor d) with
/// phi(N) = N^{-T}. A correlation (M,1) acts as (M,0) after tau.
struct GroupElement {
  BitMatrix3 matrix;
  bool duality = false;

  static GroupElement identity() { return {}; }
  static GroupElement tau() { return {BitMatrix3::identity(), true}; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;

  /// Ordered by (duality, matrix rows).
  auto operator<=>(const GroupElement& o) const {
    if (auto c = duality <=> o.duality; c != 0) return c;
    return matrix <=> o.matrix;
  }
  bool operator==(const GroupElement&) const = default;
};

GeomElement act(const GroupElement& g, GeomElement e);

nlohmann::json to_json(const GroupElement& g);
GroupElement group_element_from_json(const nlohmann::json& j);

/// The full group of order 336 with a precomputed multiplication table.
/// Elements are indexed 0..335 by (duality, matrix rows) except that the
/// identity matrix comes first in each half, so 0 is the identity, 168 is
/// tau and indices 0..167 are the collineations.
class ExtendedGroup {
 public:
  static const ExtendedGroup& instance();

  std::size_t order() const { return elements_.size(); }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  std::span<const GroupElement> elements() const { return elements_; }
  std::size_t index_of(const GroupElement& g) const;
  std::size_t identity() const { return 0; }

  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const;

  /// Image of geometry element index under group element index.
  std::size_t act(std::size_t g, std::size_t elem) const { return action_[g * 14 + elem]; }

  const std::vector<std::size_t>& multiplication_table() const { return table_; }

 private:
  ExtendedGroup();

  std::vector<GroupElement> elements_;
  std::vector<std::size_t> lookup_;  // key(g) -> index
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> action_;
};

/// A set of indices into ExtendedGroup, kept sorted.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(std::vector<std::size_t> members);

  std::size_t order() const { return members_.size(); }
  const std::vector<std::size_t>& members() const { return members_; }
  bool contains(std::size_t g) const;

  /// Contains the identity and is closed under multiplication.
  bool is_group() const;
  bool is_abelian() const;
  std::size_t max_element_order() const;
  std::size_t correlation_count() const;
  /// Members with duality bit 0.
  Subgroup collineation_part() const;
  bool is_subset_of(const Subgroup& other) const;
  bool normalizes(const Subgroup& other) const;

  bool operator==(const Subgroup&) const = default;

 private:
  std::vector<std::size_t> members_;
};

Subgroup full_group();
Subgroup collineation_group();
Subgroup trivial_subgroup();
/// Closure of the given elements under multiplication.
Subgroup generated_subgroup(std::span<const std::size_t> generators);

struct Flag {
  GeomElement point;
  GeomElement line;

  /// Throws FanoError("not incident") unless point/line form a flag.
  static Flag make(GeomElement point, GeomElement line);
  std::string label() const { return "(" + point.label() + "," + line.label() + ")"; }
  auto operator<=>(const Flag&) const = default;
};

/// All 21 flags sorted by (point, line); front() is the default flag.
std::vector<Flag> all_flags();
Flag default_flag();

Subgroup flag_stabilizer_d8(const Flag& f);
/// Collineations fixing e; order 24.
Subgroup element_stabilizer(GeomElement e);
/// The D8 of f extended by the least correlation that swaps f.point and
/// f.line and normalizes the D8.
Subgroup sylow2_d16(const Flag& f);

using Orbit = std::vector<GeomElement>;
/// Orbits sorted internally and by least member.
std::vector<Orbit> orbits(const Subgroup& h, std::span<const GeomElement> elems);

/// Least representatives of the D8-orbits of sizes 1, 2, 4 on points
/// (p, p1, p2) and on lines (l, l1, l2).
struct OrbitRepresentatives {
  GeomElement p, p1, p2;
  GeomElement l, l1, l2;
};
OrbitRepresentatives orbit_representatives_ppp(const Flag& f);

/// 0, 1 or 2 according to whether e lies in the D8-orbit of size 1, 2 or 4.
int d8_orbit_class(const Flag& f, GeomElement e);

}  // namespace btq::fano
