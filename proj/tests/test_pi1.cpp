#include <algorithm>
#include <numeric>
#include <random>

#include "btq/central_fiber.hpp"
#include "btq/presentation.hpp"
#include "btq/smith.hpp"
#include "btq/tietze.hpp"
#include "btq/todd_coxeter.hpp"
#include "doctest.h"

using namespace btq;
using namespace btq::pi1;

namespace {

Presentation rose() { return make_presentation({"a", "b", "c"}, {"a a b a b a", "a b c b c b", "b c c c c c"}); }

Presentation quotient_presentation() {
  const auto q = central_fiber::quotient_by_d16(fano::default_flag());
  return presentation_from_complex(q.named, "Pibar");
}

std::vector<long> factors(const Abelianization& a) {
  std::vector<long> out;
  for (const auto& f : a.factors) out.push_back(f.get_si());
  return out;
}

// Determinant of the k x k minor on the given rows and columns, by cofactor
// expansion.
mpz_class minor_det(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  mpz_class out = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<std::size_t> r(rows.begin() + 1, rows.end()), c;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (k != j) c.push_back(cols[k]);
    }
    const mpz_class sub = m(rows[0], cols[j]) * minor_det(m, r, c);
    out += (j % 2 ? -1 : 1) * sub;
  }
  return out;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors,
// s_k = d_k / d_{k-1}.
std::vector<mpz_class> oracle_invariants(const IntMatrix& m) {
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) g = gcd(g, minor_det(m, r, c));
    }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

Presentation random_presentation(std::mt19937_64& rng) {
  const std::size_t gens = 1 + rng() % 3;
  const std::size_t rels = 1 + rng() % 4;
  Presentation p;
  for (std::size_t g = 0; g < gens; ++g) p.generators.push_back(std::string(1, static_cast<char>('a' + g)));
  for (std::size_t r = 0; r < rels; ++r) {
    Word w;
    const std::size_t len = 1 + rng() % 8;
    for (std::size_t k = 0; k < len; ++k) w.push_back(gen_letter(rng() % gens, rng() % 2));
    p.relators.push_back(free_reduce(w));
  }
  return p;
}

}  // namespace

TEST_CASE("words") {
  const Word w{gen_letter(0), gen_letter(1), gen_letter(1, true), gen_letter(2)};
  CHECK(free_reduce(w) == Word{gen_letter(0), gen_letter(2)});
  CHECK(inverse(Word{gen_letter(0), gen_letter(1)}) == Word{gen_letter(1, true), gen_letter(0, true)});
  CHECK(cyclic_reduce(Word{gen_letter(0), gen_letter(1), gen_letter(0, true)}) == Word{gen_letter(1)});
  CHECK(cyclic_reduce(Word{gen_letter(0), gen_letter(0, true)}).empty());
  CHECK(invert(gen_letter(3)) == gen_letter(3, true));
}

TEST_CASE("text format") {
  const auto p = presentation_from_text("# rose\ngens: a b c\nrel: a a b a b a\nrel: a b c b c b\nrel: b c c c c c\n");
  CHECK(p.generators == std::vector<std::string>{"a", "b", "c"});
  CHECK(p.relators == rose().relators);
  CHECK(presentation_from_text(to_text(p)).relators == p.relators);
  CHECK(p.word_to_string(p.parse_word("a b' c")) == "a b' c");
  CHECK(make_presentation({"x"}, {"x x' x"}).relators[0] == Word{gen_letter(0)});
  CHECK_THROWS_WITH_AS(presentation_from_text("gens: a\nrel: b\n"), doctest::Contains("line 2:"), PresentationError);
  CHECK_THROWS_WITH_AS(presentation_from_text("rel: a\n"), doctest::Contains("rel before gens"), PresentationError);
  CHECK_THROWS_AS(presentation_from_text("gens: a a\n"), PresentationError);
  CHECK_THROWS_AS(presentation_from_text(""), PresentationError);
  Presentation bad{{"x'"}, {}};
  CHECK_THROWS_AS(to_text(bad), PresentationError);
}

TEST_CASE("the rose presentation") {
  const auto p = rose();
  const auto m = exponent_matrix(p);
  CHECK(m == IntMatrix{{4, 2, 0}, {1, 3, 2}, {0, 1, 5}});
  CHECK(m.determinant() == 42);
  const auto s = smith_normal_form(m);
  CHECK(s.verify(m));
  CHECK(s.diagonal == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 42}});
  const auto ab = abelianization(p);
  CHECK(factors(ab) == std::vector<long>{42});
  CHECK(ab.free_rank == 0);
  CHECK(ab.order() == "42");
  const auto tc = todd_coxeter(p, 10000);
  REQUIRE(tc.order.has_value());
  CHECK(*tc.order == 42);

  const auto t = tietze_simplify(p);
  REQUIRE(t.generators.size() == 1);
  REQUIRE(t.relators.size() == 1);
  CHECK(t.relators[0].size() == 42);
  CHECK(std::all_of(t.relators[0].begin(), t.relators[0].end(), [&](Letter x) { return x == t.relators[0][0]; }));
}

TEST_CASE("Smith normal form examples") {
  CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).invariants() == std::vector<mpz_class>{2, 4});
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).invariants() == std::vector<mpz_class>{1, 6});
  CHECK(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}).invariants().empty());
  CHECK(smith_normal_form(IntMatrix{{-5}}).invariants() == std::vector<mpz_class>{5});
  const IntMatrix wide{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto s = smith_normal_form(wide);
  CHECK(s.verify(wide));
  CHECK(s.invariants() == std::vector<mpz_class>{2, 6, 12});
  CHECK(IntMatrix{{1, 2}, {3, 4}}.determinant() == -2);
  CHECK(IntMatrix{{0, 1}, {1, 0}}.determinant() == -1);
}

TEST_CASE("Smith normal form against determinantal divisors, seeded") {
  std::mt19937_64 rng(42);
  for (int n = 0; n < 300; ++n) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % 13) - 6;
    }
    const auto s = smith_normal_form(m);
    CAPTURE(m.to_string());
    CHECK(s.verify(m));
    CHECK(s.invariants() == oracle_invariants(m));
  }
}

TEST_CASE("abelianization of small presentations") {
  CHECK(factors(abelianization(make_presentation({"a", "b"}, {"a b a' b'"}))).empty());
  CHECK(abelianization(make_presentation({"a", "b"}, {"a b a' b'"})).free_rank == 2);
  CHECK(abelianization(make_presentation({"a", "b"}, {"a b a' b'"})).order() == "infinite");
  CHECK(factors(abelianization(make_presentation({"a", "b"}, {"a a", "b b b"}))) == std::vector<long>{6});
  CHECK(factors(abelianization(make_presentation({"a", "b"}, {"a a", "b b b", "a b a b"}))) == std::vector<long>{2});
  CHECK(abelianization(make_presentation({}, {})).order() == "1");
}

TEST_CASE("Todd-Coxeter on known groups") {
  auto order = [](const Presentation& p) { return todd_coxeter(p, 100000).order; };
  CHECK(order(make_presentation({"a"}, {"a a a a a"})) == 5);
  CHECK(order(make_presentation({"a", "b"}, {"a a", "b b b", "a b a b"})) == 6);
  CHECK(order(make_presentation({"a", "b"}, {"a a a a", "a a b' b'", "b' a b a"})) == 8);
  CHECK(order(make_presentation({"a", "b"}, {"a a", "b b", "a b a b a b a b a b a b a b"})) == 14);
  CHECK(order(make_presentation({"a", "b"}, {"a a", "b b b", "a b a b a b a b a b"})) == 60);
  CHECK(order(make_presentation({"a", "b"}, {"a", "b"})) == 1);
  CHECK(order(make_presentation({}, {})) == 1);
  CHECK(order(quotient_presentation()) == 42);
}

TEST_CASE("Todd-Coxeter limits") {
  const auto free = make_presentation({"a", "b"}, {});
  const auto r = todd_coxeter(free, 500);
  CHECK_FALSE(r.order.has_value());
  CHECK_FALSE(r.cancelled);
  CHECK(r.cosets_defined <= 500);

  const auto capped = todd_coxeter(rose(), 1000000, 40);
  CHECK_FALSE(capped.order.has_value());
  CHECK(capped.peak_cells <= 40);

  std::stop_source stop;
  stop.request_stop();
  const auto c = todd_coxeter(rose(), 1000, kDefaultCellCap, stop.get_token());
  CHECK(c.cancelled);
  CHECK_FALSE(c.order.has_value());

  const auto ok = todd_coxeter(quotient_presentation(), 100000);
  CHECK(ok.peak_cells <= kDefaultCellCap);
}

TEST_CASE("presentations of complexes") {
  cw::Complex torus;
  torus.add_vertex("v");
  torus.add_edge("a", "v", "v");
  torus.add_edge("b", "v", "v");
  torus.add_face("T", {{"a", 1}, {"b", 1}, {"a", -1}, {"b", -1}});
  CHECK(abelianization(presentation_from_complex(torus, "v")).free_rank == 2);

  cw::Complex rp2;
  rp2.add_vertex("v");
  rp2.add_edge("a", "v", "v");
  rp2.add_face("F", {{"a", 1}, {"a", 1}});
  const auto p = presentation_from_complex(rp2, "v");
  CHECK(factors(abelianization(p)) == std::vector<long>{2});
  CHECK(todd_coxeter(p, 100).order == 2);

  cw::Complex klein;
  klein.add_vertex("v");
  klein.add_edge("a", "v", "v");
  klein.add_edge("b", "v", "v");
  klein.add_face("K", {{"a", 1}, {"b", 1}, {"a", -1}, {"b", 1}});
  const auto k = abelianization(presentation_from_complex(klein, "v"));
  CHECK(factors(k) == std::vector<long>{2});
  CHECK(k.free_rank == 1);

  cw::Complex two;
  two.add_vertex("u");
  two.add_vertex("w");
  CHECK_THROWS_WITH_AS(presentation_from_complex(two, "u"), "complex is disconnected", PresentationError);
}

TEST_CASE("the quotient complex has fundamental group of order 42") {
  const auto q = central_fiber::quotient_by_d16(fano::default_flag());
  const auto tree = spanning_tree_edges(q.named, "Pibar");
  CHECK(tree.size() == 3);
  const auto p = presentation_from_complex(q.named, "Pibar");
  CHECK(p.generators.size() == 15);
  CHECK(p.relators.size() == 15);
  const auto ab = abelianization(p);
  CHECK(factors(ab) == std::vector<long>{42});
  CHECK(ab.free_rank == 0);
  const auto tc = todd_coxeter(p, 100000);
  REQUIRE(tc.order.has_value());
  CHECK(*tc.order == 42);
  const auto t = tietze_simplify(p);
  CHECK(abelianization(t) == ab);
  CHECK(todd_coxeter(t, 100000).order == 42);
}

TEST_CASE("subdividing any edge leaves the group unchanged") {
  const auto q = central_fiber::quotient_by_d16(fano::default_flag());
  for (const auto& e : q.named.edges) {
    CAPTURE(e.label);
    const auto s = cw::subdivide_edge(q.named, e.label);
    const auto p = presentation_from_complex(s, "Pibar");
    CHECK(factors(abelianization(p)) == std::vector<long>{42});
    CHECK(todd_coxeter(p, 100000).order == 42);
  }
}

TEST_CASE("every flag gives Z/42") {
  for (const auto& f : fano::all_flags()) {
    const auto q = central_fiber::quotient_by_d16(f);
    const auto p = presentation_from_complex(q.named, "Pibar");
    CHECK(factors(abelianization(p)) == std::vector<long>{42});
    CHECK(todd_coxeter(p, 100000).order == 42);
  }
}

TEST_CASE("the 16-vertex complex: first homology as a diagnostic") {
  const auto c = central_fiber::build_dual_complex();
  const auto ab = abelianization(presentation_from_complex(c, "Pi"));
  MESSAGE("H1 of the dual complex: free rank " << ab.free_rank << ", " << ab.factors.size() << " torsion factors");
  // No expected value; it must at least not depend on the spanning tree.
  for (const auto& v : c.vertices) CHECK(abelianization(presentation_from_complex(c, v)) == ab);
}

TEST_CASE("Tietze corpus: 50 seeded presentations") {
  std::mt19937_64 rng(7);
  int finite = 0;
  for (int n = 0; n < 50; ++n) {
    const auto p = random_presentation(rng);
    CAPTURE(to_text(p));
    const auto t = tietze_simplify(p);
    CHECK(abelianization(t) == abelianization(p));
    CHECK(t.generators.size() <= p.generators.size());
    CHECK(t.relators.size() <= p.relators.size());
    for (const auto& r : t.relators) CHECK(cyclic_reduce(r) == r);
    const auto before = todd_coxeter(p, 20000);
    if (before.order) {
      ++finite;
      CHECK(todd_coxeter(t, 20000).order == before.order);
    }
  }
  CHECK(finite > 10);
}

TEST_CASE("Tietze moves keep small groups") {
  const auto s3 = make_presentation({"a", "b"}, {"a a", "b b b", "a b a b"});
  const auto t = tietze_simplify(s3);
  CHECK(todd_coxeter(t, 1000).order == 6);
  const auto z = tietze_simplify(make_presentation({"a", "b"}, {"a b'"}));
  CHECK(z.generators.size() == 1);
  CHECK(z.relators.empty());
  CHECK(tietze_simplify(rose(), 0).relators == rose().relators);
}
