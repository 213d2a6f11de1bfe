#include <algorithm>

#include "btq/cw.hpp"
#include "doctest.h"

using namespace btq::cw;

namespace {

Complex torus() {
  Complex c;
  c.add_vertex("v");
  c.add_edge("a", "v", "v");
  c.add_edge("b", "v", "v");
  c.add_face("T", {{"a", 1}, {"b", 1}, {"a", -1}, {"b", -1}});
  return c;
}

Complex klein_bottle() {
  Complex c;
  c.add_vertex("v");
  c.add_edge("a", "v", "v");
  c.add_edge("b", "v", "v");
  c.add_face("K", {{"a", 1}, {"b", 1}, {"a", -1}, {"b", 1}});
  return c;
}

// Two vertices joined by two edges; one or two discs glued along a b^-1.
Complex bigon(bool two_faces) {
  Complex c;
  c.add_vertex("u");
  c.add_vertex("v");
  c.add_edge("a", "u", "v");
  c.add_edge("b", "u", "v");
  c.add_face("F", {{"a", 1}, {"b", -1}});
  if (two_faces) c.add_face("G", {{"a", 1}, {"b", -1}});
  return c;
}

FiniteGroup z2() { return {2, 0, {0, 1, 1, 0}}; }

}  // namespace

TEST_CASE("validation and Euler characteristic") {
  CHECK(validate(torus()).euler_characteristic == 0);
  CHECK(validate(klein_bottle()).euler_characteristic == 0);
  CHECK(validate(bigon(true)).euler_characteristic == 2);
  const auto cert = validate(bigon(false));
  CHECK(cert.vertices == 2);
  CHECK(cert.edges == 2);
  CHECK(cert.faces == 1);
}

TEST_CASE("invalid complexes are rejected") {
  Complex c;
  c.add_vertex("u");
  c.add_vertex("v");
  c.add_edge("a", "u", "v");
  CHECK_THROWS_WITH_AS(c.add_vertex("u"), "duplicate vertex label u", CwError);
  CHECK_THROWS_WITH_AS(c.add_edge("b", "u", "w"), "dangling edge endpoint in edge b", CwError);
  c.add_face("F", {{"a", 1}});
  CHECK_THROWS_WITH_AS(validate(c), "open boundary word in face F", CwError);

  Complex d = torus();
  d.faces.push_back({"E", {}});
  CHECK_THROWS_WITH_AS(validate(d), "empty boundary word in face E", CwError);

  Complex e = torus();
  e.edges[1].dst = 7;
  CHECK_THROWS_AS(validate(e), CwError);

  Complex f = torus();
  f.edges[1].label = "a";
  CHECK_THROWS_WITH_AS(validate(f), doctest::Contains("duplicate"), CwError);
}

TEST_CASE("text and JSON round-trips") {
  const auto t = torus();
  const auto text = to_text(t);
  CHECK(text == "V v\nE a v v\nE b v v\nF T +a +b -a -b\n");
  const auto back = from_text(text);
  CHECK(to_text(back) == text);
  CHECK(isomorphic_labeled(t, back, {{"v", "v"}, {"a", "a"}, {"b", "b"}, {"T", "T"}}));
  CHECK(to_text(complex_from_json(to_json(t))) == text);
  CHECK(to_json(t)["faces"][0]["boundary"] == nlohmann::json::parse(R"(["+a","+b","-a","-b"])"));

  CHECK(to_text(from_text("# comment\n\nV x\nE e x x\nF f +e\n")) == "V x\nE e x x\nF f +e\n");
  CHECK_THROWS_WITH_AS(from_text("V x\nQ y\n"), doctest::Contains("line 2:"), CwError);
  CHECK_THROWS_WITH_AS(from_text("V x\nE e x y\n"), doctest::Contains("line 2:"), CwError);
  CHECK_THROWS_WITH_AS(from_text("V x\nE e x x\nF f e\n"), doctest::Contains("line 3:"), CwError);
}

TEST_CASE("alignments") {
  const auto t = torus();
  const BoundaryWord w = t.faces[0].boundary;
  const auto same = alignments(t, w, 0);
  REQUIRE(!same.empty());
  CHECK(same.front() == FaceImage{0, 0, false});
  // image[i] == target[(i + 1) % 4]
  BoundaryWord rotated{w[1], w[2], w[3], w[0]};
  CHECK(alignments(t, rotated, 0).front() == FaceImage{0, 1, false});
  CHECK(alignments(t, inverse_word(w), 0).front() == FaceImage{0, 0, true});
  CHECK(alignments(t, BoundaryWord{w[0]}, 0).empty());
}

TEST_CASE("a swap of two discs is a free action on faces") {
  const auto c = bigon(true);
  CellAction a{z2(), {identity_permutation(c), make_permutation(c, {0, 1}, {{0, 1}, {1, 1}}, {1, 0})}};
  validate_action(c, a);
  CHECK(check_pointwise_fixity(c, a));
  const auto orbits = cell_orbits(c, a);
  CHECK(orbits.vertices.size() == 2);
  CHECK(orbits.edges.size() == 2);
  CHECK(orbits.faces == std::vector<std::vector<std::size_t>>{{0, 1}});
  const auto q = quotient(c, a);
  CHECK(q.complex.vertices == std::vector<std::string>{"orbit:u", "orbit:v"});
  CHECK(q.complex.faces.size() == 1);
  CHECK(q.complex.faces[0].label == "orbit:F");
  CHECK(q.map.face == std::vector<std::size_t>{0, 0});
  CHECK(validate(q.complex).euler_characteristic == 1);
}

TEST_CASE("negative: swapping the edges of a bigon reverses its face") {
  const auto c = bigon(false);
  const auto swap = make_permutation(c, {0, 1}, {{1, 1}, {0, 1}}, {0});
  CHECK(swap.face[0] == FaceImage{0, 0, true});
  CellAction a{z2(), {identity_permutation(c), swap}};
  validate_action(c, a);
  const auto v = fixity_violations(c, a);
  REQUIRE(v.size() == 1);
  CHECK(v[0].element == 1);
  CHECK(v[0].dimension == 2);
  CHECK(v[0].reason == "face boundary reversed");
  CHECK_FALSE(check_pointwise_fixity(c, a));
  CHECK_THROWS_WITH_AS(quotient(c, a), "quotient is not a CW complex cell-for-orbit", CwError);
}

TEST_CASE("negative: a rotation of the torus square") {
  // a -> b -> a^-1 rotates T = a b a^-1 b^-1 by one step.
  const auto c = torus();
  const auto r = make_permutation(c, {0}, {{1, 1}, {0, -1}}, {0});
  CHECK(r.face[0].face == 0);
  CHECK(r.face[0].rotation == 1);
  CHECK_FALSE(r.face[0].reversed);
  // Order 4: the cyclic group generated by r.
  FiniteGroup z4{4, 0, {}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) z4.table.push_back((i + j) % 4);
  }
  std::vector<CellPermutation> powers{identity_permutation(c)};
  for (int k = 1; k < 4; ++k) {
    const auto& prev = powers.back();
    std::vector<SignedEdge> e;
    for (auto s : prev.edge) e.push_back({r.edge[s.edge].edge, r.edge[s.edge].sign * s.sign});
    powers.push_back(make_permutation(c, {0}, e, {0}));
  }
  CellAction a{z4, powers};
  validate_action(c, a);
  CHECK_FALSE(check_pointwise_fixity(c, a));
  CHECK(cell_orbits(c, a).edges.size() == 1);
}

TEST_CASE("misaligned face images are rejected") {
  const auto c = bigon(false);
  // Reversing a alone does not carry the boundary of F to any face.
  CHECK_THROWS_WITH_AS(make_permutation(c, {1, 0}, {{0, -1}, {0, -1}}, {0}), "boundary misalignment: face F -> F",
                       CwError);
}

TEST_CASE("negative: a corrupted multiplication table") {
  const auto c = bigon(true);
  CellAction a{z2(), {identity_permutation(c), make_permutation(c, {0, 1}, {{0, 1}, {1, 1}}, {1, 0})}};
  a.group.table[3] = 1;  // claims g * g = g
  CHECK_FALSE(a.group.is_group());
  CHECK_THROWS_WITH_AS(validate_action(c, a), doctest::Contains("homomorphism"), CwError);

  CellAction b{z2(), {identity_permutation(c)}};
  CHECK_THROWS_WITH_AS(validate_action(c, b), "action has wrong number of elements", CwError);

  CellAction d{z2(), {identity_permutation(c), identity_permutation(c)}};
  d.elements[1].vertex = {0, 0};
  CHECK_THROWS_WITH_AS(validate_action(c, d), doctest::Contains("vertex map is not a bijection"), CwError);
}

TEST_CASE("restriction of an action") {
  const auto c = bigon(true);
  CellAction a{z2(), {identity_permutation(c), make_permutation(c, {0, 1}, {{0, 1}, {1, 1}}, {1, 0})}};
  const auto r = restrict_action(a, {0});
  CHECK(r.group.order == 1);
  validate_action(c, r);
  CHECK(cell_orbits(c, r).faces.size() == 2);
  CHECK_THROWS_AS(restrict_action(a, {1}), CwError);
}

TEST_CASE("labelled isomorphism") {
  const auto t = torus();
  const auto renamed = relabel(t, {{"a", "x"}, {"b", "y"}, {"T", "S"}});
  CHECK(renamed.edges[0].label == "x");
  CHECK(isomorphic_labeled(t, renamed));
  CHECK(isomorphic_labeled(t, renamed, {{"a", "x"}, {"b", "y"}}));
  // a -> y is also fine: swap the two loops and read the square backwards
  CHECK(isomorphic_labeled(t, renamed, {{"a", "y"}}));
  CHECK_FALSE(isomorphic_labeled(t, renamed, {{"a", "S"}}));
  CHECK_FALSE(isomorphic_labeled(t, klein_bottle()));
  CHECK_FALSE(isomorphic_labeled(bigon(false), bigon(true)));
  CHECK(isomorphic_labeled(klein_bottle(), relabel(klein_bottle(), {{"K", "L"}})));
}

TEST_CASE("subdivision") {
  const auto t = torus();
  const auto s = subdivide_edge(t, "a");
  CHECK(validate(s).euler_characteristic == validate(t).euler_characteristic);
  CHECK(s.find_vertex("a#mid").has_value());
  CHECK(s.find_edge("a#1").has_value());
  CHECK(s.find_edge("a#2").has_value());
  CHECK(to_text(s) == "V v\nV a#mid\nE a#1 v a#mid\nE b v v\nE a#2 a#mid v\nF T +a#1 +a#2 +b -a#2 -a#1 -b\n");
  CHECK_THROWS_AS(subdivide_edge(t, "zz"), CwError);
}
