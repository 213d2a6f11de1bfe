#include "btq/tietze.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace btq::pi1 {

namespace {

// Least rotation of the word or of its inverse; identifies relators with the
// same normal closure up to conjugation and inversion.
Word cyclic_key(const Word& w) {
  Word best = w;
  const Word inv = inverse(w);
  for (std::size_t r = 0; r < w.size(); ++r) {
    Word a(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
    a.insert(a.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
    Word b(inv.begin() + static_cast<std::ptrdiff_t>(r), inv.end());
    b.insert(b.end(), inv.begin(), inv.begin() + static_cast<std::ptrdiff_t>(r));
    best = std::min({best, a, b});
  }
  return best;
}

// Reduces every relator, drops empty and duplicate ones. Returns true if
// anything changed.
bool tidy(Presentation& p) {
  bool changed = false;
  std::vector<Word> out;
  std::set<Word> seen;
  for (const auto& r : p.relators) {
    Word w = cyclic_reduce(r);
    if (w != r) changed = true;
    if (w.empty()) {
      changed = true;
      continue;
    }
    if (!seen.insert(cyclic_key(w)).second) {
      changed = true;
      continue;
    }
    out.push_back(std::move(w));
  }
  p.relators = std::move(out);
  return changed;
}

// Removes generator g, substituting `value` for each occurrence.
Presentation eliminate(const Presentation& p, std::size_t g, std::size_t source, const Word& value) {
  const Word value_inv = inverse(value);
  auto renumber = [g](Letter x) { return generator_of(x) > g ? x - 2 : x; };
  Presentation out;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i != g) out.generators.push_back(p.generators[i]);
  }
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (r == source) continue;
    Word w;
    for (auto x : p.relators[r]) {
      if (generator_of(x) == g) {
        const Word& sub = is_inverse(x) ? value_inv : value;
        for (auto y : sub) w.push_back(renumber(y));
      } else {
        w.push_back(renumber(x));
      }
    }
    out.relators.push_back(free_reduce(w));
  }
  return out;
}

// Best elimination: the generator occurring exactly once in some relator
// whose substitution gives the shortest result. Ties go to the lowest
// generator, then the lowest relator.
std::optional<Presentation> best_elimination(const Presentation& p) {
  std::optional<Presentation> best;
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      const Word& w = p.relators[r];
      std::size_t count = 0, pos = 0;
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (generator_of(w[k]) == g) {
          ++count;
          pos = k;
        }
      }
      if (count != 1) continue;
      // w = u x^e v, so x^e = u^-1 v^-1 = (v u)^-1.
      Word vu(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
      vu.insert(vu.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      const Word value = is_inverse(w[pos]) ? free_reduce(vu) : inverse(free_reduce(vu));
      Presentation candidate = eliminate(p, g, r, value);
      tidy(candidate);
      if (!best || candidate.total_length() < best->total_length()) best = std::move(candidate);
    }
  }
  return best;
}

// With one generator left every relator is a power; keep their gcd.
bool merge_powers(Presentation& p) {
  if (p.generators.size() != 1 || p.relators.empty()) return false;
  long g = 0;
  for (const auto& r : p.relators) {
    long e = 0;
    for (auto x : r) e += is_inverse(x) ? -1 : 1;
    g = std::gcd(g, std::labs(e));
  }
  Word w(static_cast<std::size_t>(g), gen_letter(0));
  std::vector<Word> merged;
  if (g != 0) merged.push_back(std::move(w));
  if (merged == p.relators) return false;
  p.relators = std::move(merged);
  return true;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p, std::size_t budget) {
  p.check();
  Presentation cur = p;
  std::size_t moves = 0;
  while (moves < budget) {
    if (tidy(cur)) {
      ++moves;
      continue;
    }
    if (merge_powers(cur)) {
      ++moves;
      continue;
    }
    auto next = best_elimination(cur);
    if (!next) break;
    cur = std::move(*next);
    ++moves;
  }
  return cur;
}

}  // namespace btq::pi1
