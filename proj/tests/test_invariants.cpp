#include "btq/invariants.hpp"
#include "doctest.h"

using namespace btq;
using namespace btq::invariants;

TEST_CASE("Chern numbers from the uniformization data") {
  const auto s = proposition_invariants({16, 2});
  CHECK(s.chi == 16);
  CHECK(s.c1_sq == 144);
  CHECK(s.c2 == 48);
  CHECK(s.chi_integral());
  for (long n = 1; n <= 40; ++n) {
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
      const auto t = proposition_invariants({n, q});
      CHECK(t.c1_sq == 3 * t.c2);
      CHECK(t.chi * 3 == t.c2);
      CHECK(t.c2 == n * (q - 1) * (q - 1) * (q + 1));
    }
  }
  // N = 1, q = 2: chi = 1 exactly; N = 1, q = 3: chi = 16/3 is not an integer.
  CHECK(proposition_invariants({1, 2}).chi == 1);
  const auto odd = proposition_invariants({1, 3});
  CHECK_FALSE(odd.chi_integral());
  CHECK(odd.chi == mpq_class(16, 3));
  CHECK_THROWS_AS(proposition_invariants({0, 2}), InvariantsError);
  CHECK_THROWS_AS(proposition_invariants({1, 1}), InvariantsError);
}

TEST_CASE("etale descent") {
  const auto cover = proposition_invariants({16, 2});
  const auto s = etale_descent(cover, 16);
  CHECK(s.chi == 1);
  CHECK(s.c1_sq == 9);
  CHECK(s.c2 == 3);
  CHECK(etale_descent(cover, 1).c2 == 48);
  CHECK_THROWS_WITH_AS(etale_descent(cover, 5), "not an étale-quotient candidate", InvariantsError);
  CHECK_THROWS_WITH_AS(etale_descent(proposition_invariants({1, 3}), 1), "not an étale-quotient candidate",
                       InvariantsError);
  CHECK_THROWS_AS(etale_descent(cover, 0), InvariantsError);
}

TEST_CASE("vertex orbit counts along the chain trivial, D8, D16, full") {
  const auto f = fano::default_flag();
  const std::size_t trivial = vertex_orbit_count(fano::trivial_subgroup());
  const std::size_t d8 = vertex_orbit_count(fano::flag_stabilizer_d8(f));
  const std::size_t d16 = vertex_orbit_count(fano::sylow2_d16(f));
  const std::size_t full = vertex_orbit_count(fano::full_group());
  CHECK(trivial == 16);
  // D8 fixes Pi and Pi* and has 6 orbits on the 14 elements.
  CHECK(d8 == 8);
  CHECK(d16 == 4);
  CHECK(full == 2);
  CHECK(trivial >= d8);
  CHECK(d8 >= d16);
  CHECK(d16 >= full);
  CHECK(vertex_orbit_count(fano::collineation_group()) == 4);
}

TEST_CASE("end to end: from 16 orbits to the numbers of a fake plane") {
  const long n = static_cast<long>(vertex_orbit_count(fano::trivial_subgroup()));
  auto s = etale_descent(proposition_invariants({n, 2}), 16);
  s.pg = 0;
  s.q_irr = 0;
  const auto v = fake_plane_check(s);
  CHECK(v.is_fake_plane);
  CHECK(v.reasons.empty());
}

TEST_CASE("fake plane predicate") {
  SurfaceInvariants plane{1, 9, 3, 0, 0};
  CHECK(fake_plane_check(plane).is_fake_plane);

  SurfaceInvariants cover{16, 144, 48, std::nullopt, std::nullopt};
  const auto v = fake_plane_check(cover);
  CHECK_FALSE(v.is_fake_plane);
  CHECK(std::find(v.reasons.begin(), v.reasons.end(), "pg unknown") != v.reasons.end());

  SurfaceInvariants irregular{1, 9, 3, 1, 1};
  const auto w = fake_plane_check(irregular);
  CHECK_FALSE(w.is_fake_plane);
  CHECK(std::find(w.reasons.begin(), w.reasons.end(), "P_g≠0") != w.reasons.end());

  SurfaceInvariants inconsistent{1, 9, 3, 1, 0};
  const auto x = fake_plane_check(inconsistent);
  CHECK(std::find(x.reasons.begin(), x.reasons.end(), "chi≠1−q+P_g") != x.reasons.end());
}

TEST_CASE("JSON form") {
  const auto j = to_json(proposition_invariants({16, 2}));
  CHECK(j["chi"] == "16");
  CHECK(j["c1_sq"] == 144);
  CHECK(j["c2"] == 48);
  CHECK(j["pg"].is_null());
  CHECK(to_json(proposition_invariants({1, 3}))["chi"] == "16/3");
}
