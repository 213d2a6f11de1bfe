#pragma once

// The dual complex of the 16-component special fiber: vertices Pi, Pi* and
// C(e) for the 14 elements e of PG(2,2), its action by the order-336 group,
// and its quotient by a Sylow 2-subgroup.

#include <array>
#include <string>
#include <vector>

#include "btq/cw.hpp"
#include "btq/fano.hpp"

namespace btq::central_fiber {

using fano::GeomElement;

// Cell labels. Point-first ordering is used for the unordered P and P* pairs.
std::string pi_label();
std::string pi_star_label();
std::string component_label(GeomElement e);                 // C(e)
std::string d_label(GeomElement e);                         // D(e)
std::string d_star_label(GeomElement e);                    // D*(e)
std::string d_pair_label(GeomElement e, GeomElement f);     // D(e,f)
std::string e_pair_label(GeomElement e, GeomElement f);     // E(e,f)
std::string p_label(GeomElement a, GeomElement b);          // P(p,l)
std::string p_star_label(GeomElement a, GeomElement b);     // P*(p,l)
std::string q_label(GeomElement e, GeomElement f);          // Q(e,f)

/// A cyclic ordering of the three elements incident with e, stored rotated
/// so that its least element comes first.
struct CyclicOrder3 {
  GeomElement e;
  std::array<GeomElement, 3> order;

  /// The two orderings of e: sorted (f1,f2,f3) first, then (f1,f3,f2).
  static std::array<CyclicOrder3, 2> of(GeomElement e);
  static CyclicOrder3 normalized(GeomElement e, std::array<GeomElement, 3> order);
  bool is_forward() const;
  std::string label() const;  // R(e;f,g,h)
  auto operator<=>(const CyclicOrder3&) const = default;
};

/// 16 vertices, 112 edges, 112 faces.
cw::Complex build_dual_complex();

/// The action of the full group (elements indexed as in fano::ExtendedGroup).
/// Throws cw::CwError naming the element and face on any misalignment.
cw::CellAction pgl27_action();

struct ReportEntry {
  std::string item;
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct OrbitReport {
  std::vector<ReportEntry> entries;
  bool all_pass() const;
};

OrbitReport verify_orbit_decomposition();

struct Census {
  std::size_t vertices, edges, faces;
  long euler_characteristic;
};

struct D16Quotient {
  fano::Flag flag;
  cw::Complex complex;           // labels "orbit:<least member>"
  cw::OrbitMap map;
  cw::LabelDictionary names;     // orbit label -> bar name
  cw::Complex named;             // complex relabelled with bar names
  bool fixity = false;
  bool matches_table = false;
  Census census() const;
};

/// Quotient by sylow2_d16(f) together with its comparison against the
/// hand-encoded table. Throws cw::CwError if fixity or the comparison fails.
D16Quotient quotient_by_d16(const fano::Flag& f);

/// The quotient complex as tabulated by hand: vertices Pibar, Cbar(p),
/// Cbar(p'), Cbar(p''), 18 edges and 15 faces.
cw::Complex reference_quotient_table();

}  // namespace btq::central_fiber
