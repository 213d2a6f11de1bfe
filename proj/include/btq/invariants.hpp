#pragma once

// Numerical invariants of a surface uniformized by a torsion-free lattice
// acting on the building with N vertex orbits over a residue field of size q.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "btq/fano.hpp"
#include "json.hpp"

namespace btq::invariants {

class InvariantsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct UniformizationData {
  long n = 1;  // vertex orbits
  long q = 2;  // residue field size
};

struct SurfaceInvariants {
  mpq_class chi;
  mpz_class c1_sq;
  mpz_class c2;
  std::optional<long> pg;
  std::optional<long> q_irr;
  bool chi_integral() const { return chi.get_den() == 1; }
};

/// chi = N (q-1)^2 (q+1) / 3, c2 = N (q-1)^2 (q+1), c1^2 = 3 c2.
SurfaceInvariants proposition_invariants(const UniformizationData& d);

/// Divides chi, c1^2 and c2 by the degree of a free quotient map. Throws
/// InvariantsError unless all three are divisible.
SurfaceInvariants etale_descent(const SurfaceInvariants& cover, long degree);

/// Number of orbits of h on the 16 components {Pi, Pi*} and C(e).
std::size_t vertex_orbit_count(const fano::Subgroup& h);

struct FakePlaneVerdict {
  bool is_fake_plane = false;
  std::vector<std::string> reasons;  // empty when true
};

/// pg = q = 0, c1^2 = 9, c2 = 3, chi = 1 and chi = 1 - q + pg.
FakePlaneVerdict fake_plane_check(const SurfaceInvariants& s);

nlohmann::json to_json(const SurfaceInvariants& s);

}  // namespace btq::invariants
