#include "btq/invariants.hpp"

#include "btq/central_fiber.hpp"

namespace btq::invariants {

SurfaceInvariants proposition_invariants(const UniformizationData& d) {
  if (d.n < 1) throw InvariantsError("N must be positive");
  if (d.q < 2) throw InvariantsError("q must be at least 2");
  const mpz_class n = d.n, q = d.q;
  const mpz_class c2 = n * (q - 1) * (q - 1) * (q + 1);
  SurfaceInvariants s;
  s.c2 = c2;
  s.c1_sq = 3 * c2;
  s.chi = mpq_class(c2, 3);
  s.chi.canonicalize();
  return s;
}

SurfaceInvariants etale_descent(const SurfaceInvariants& cover, long degree) {
  if (degree < 1) throw InvariantsError("degree must be positive");
  const mpz_class deg = degree;
  const bool divisible = cover.chi_integral() &&
                         mpz_divisible_p(cover.chi.get_num_mpz_t(), deg.get_mpz_t()) &&
                         mpz_divisible_p(cover.c1_sq.get_mpz_t(), deg.get_mpz_t()) &&
                         mpz_divisible_p(cover.c2.get_mpz_t(), deg.get_mpz_t());
  if (!divisible) throw InvariantsError("not an étale-quotient candidate");
  SurfaceInvariants out;
  out.chi = cover.chi / deg;
  out.c1_sq = cover.c1_sq / deg;
  out.c2 = cover.c2 / deg;
  if (degree == 1) {
    out.pg = cover.pg;
    out.q_irr = cover.q_irr;
  }
  return out;
}

std::size_t vertex_orbit_count(const fano::Subgroup& h) {
  const cw::CellAction action = central_fiber::pgl27_action();
  const std::size_t nv = action.elements.front().vertex.size();
  std::vector<bool> seen(nv, false);
  std::size_t orbits = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    if (seen[v]) continue;
    ++orbits;
    for (auto g : h.members()) seen[action.elements.at(g).vertex[v]] = true;
  }
  return orbits;
}

FakePlaneVerdict fake_plane_check(const SurfaceInvariants& s) {
  FakePlaneVerdict v;
  if (!s.pg) v.reasons.push_back("pg unknown");
  if (!s.q_irr) v.reasons.push_back("q unknown");
  if (s.pg && *s.pg != 0) v.reasons.push_back("P_g≠0");
  if (s.q_irr && *s.q_irr != 0) v.reasons.push_back("q≠0");
  if (s.c1_sq != 9) v.reasons.push_back("c1^2≠9");
  if (s.c2 != 3) v.reasons.push_back("c2≠3");
  if (s.chi != 1) v.reasons.push_back("chi≠1");
  if (s.pg && s.q_irr && s.chi != mpq_class(1 - *s.q_irr + *s.pg)) v.reasons.push_back("chi≠1−q+P_g");
  v.is_fake_plane = v.reasons.empty();
  return v;
}

nlohmann::json to_json(const SurfaceInvariants& s) {
  auto integer = [](const mpz_class& x) -> nlohmann::json {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
  };
  nlohmann::json j = {{"chi", s.chi.get_str()},
                      {"chi_integral", s.chi_integral()},
                      {"c1_sq", integer(s.c1_sq)},
                      {"c2", integer(s.c2)}};
  j["pg"] = s.pg ? nlohmann::json(*s.pg) : nlohmann::json(nullptr);
  j["q_irr"] = s.q_irr ? nlohmann::json(*s.q_irr) : nlohmann::json(nullptr);
  return j;
}

}  // namespace btq::invariants
