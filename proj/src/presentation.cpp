#include "btq/presentation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace btq::pi1 {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = invert(x);
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto x : w) {
    if (!out.empty() && out.back() == invert(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == invert(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::size_t Presentation::total_length() const {
  return std::accumulate(relators.begin(), relators.end(), std::size_t{0},
                         [](std::size_t n, const Word& w) { return n + w.size(); });
}

void Presentation::check() const {
  for (const auto& w : relators) {
    for (auto x : w) {
      if (generator_of(x) >= generators.size()) throw PresentationError("relator uses an unknown generator");
    }
  }
}

std::string Presentation::word_to_string(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += generators.at(generator_of(w[i]));
    if (is_inverse(w[i])) out += '\'';
  }
  return out;
}

Word Presentation::parse_word(const std::string& text) const {
  std::istringstream in(text);
  Word w;
  for (std::string tok; in >> tok;) {
    bool inv = false;
    if (tok.size() > 1 && tok.back() == '\'') {
      inv = true;
      tok.pop_back();
    }
    auto it = std::find(generators.begin(), generators.end(), tok);
    if (it == generators.end()) throw PresentationError("unknown generator '" + tok + "'");
    w.push_back(gen_letter(static_cast<std::size_t>(it - generators.begin()), inv));
  }
  return w;
}

Presentation make_presentation(std::vector<std::string> generators, const std::vector<std::string>& relators) {
  Presentation p{std::move(generators), {}};
  for (const auto& r : relators) p.relators.push_back(free_reduce(p.parse_word(r)));
  return p;
}

std::string to_text(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& g : p.generators) {
    if (g.empty() || g.back() == '\'' || g.find_first_of(" \t\n") != std::string::npos) {
      throw PresentationError("generator label not representable in text form: '" + g + "'");
    }
    os << ' ' << g;
  }
  os << '\n';
  for (const auto& r : p.relators) {
    os << "rel:";
    if (!r.empty()) os << ' ' << p.word_to_string(r);
    os << '\n';
  }
  return os.str();
}

Presentation presentation_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Presentation p;
  bool have_gens = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    try {
      if (line.rfind("gens:", 0) == 0) {
        if (have_gens) throw PresentationError("duplicate gens line");
        std::istringstream gs(line.substr(5));
        for (std::string g; gs >> g;) {
          if (g.back() == '\'') throw PresentationError("generator labels cannot end with '");
          if (std::find(p.generators.begin(), p.generators.end(), g) != p.generators.end()) {
            throw PresentationError("duplicate generator " + g);
          }
          p.generators.push_back(g);
        }
        have_gens = true;
      } else if (line.rfind("rel:", 0) == 0) {
        if (!have_gens) throw PresentationError("rel before gens");
        p.relators.push_back(free_reduce(p.parse_word(line.substr(4))));
      } else {
        throw PresentationError("expected 'gens:' or 'rel:'");
      }
    } catch (const PresentationError& e) {
      throw PresentationError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_gens) throw PresentationError("missing gens line");
  return p;
}

namespace {

std::vector<bool> tree_edges(const cw::Complex& c, std::size_t root) {
  // Incident non-loop edges of each vertex, in label order.
  std::vector<std::vector<std::size_t>> incident(c.vertices.size());
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    if (c.edges[e].src == c.edges[e].dst) continue;
    incident[c.edges[e].src].push_back(e);
    incident[c.edges[e].dst].push_back(e);
  }
  for (auto& list : incident) {
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) { return c.edges[a].label < c.edges[b].label; });
  }
  std::vector<bool> seen(c.vertices.size(), false), in_tree(c.edges.size(), false);
  std::deque<std::size_t> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (auto e : incident[v]) {
      const std::size_t w = c.edges[e].src == v ? c.edges[e].dst : c.edges[e].src;
      if (seen[w]) continue;
      seen[w] = true;
      in_tree[e] = true;
      queue.push_back(w);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw PresentationError("complex is disconnected");
  return in_tree;
}

}  // namespace

Presentation presentation_from_complex(const cw::Complex& c, const std::string& basepoint) {
  cw::validate(c);
  const auto in_tree = tree_edges(c, c.vertex_index(basepoint));
  Presentation p;
  std::vector<std::size_t> gen_of(c.edges.size(), SIZE_MAX);
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    if (in_tree[e]) continue;
    gen_of[e] = p.generators.size();
    p.generators.push_back(c.edges[e].label);
  }
  for (const auto& f : c.faces) {
    Word w;
    for (const auto& s : f.boundary) {
      if (in_tree[s.edge]) continue;
      w.push_back(gen_letter(gen_of[s.edge], s.sign < 0));
    }
    p.relators.push_back(free_reduce(w));
  }
  return p;
}

std::vector<std::string> spanning_tree_edges(const cw::Complex& c, const std::string& basepoint) {
  const auto in_tree = tree_edges(c, c.vertex_index(basepoint));
  std::vector<std::string> out;
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    if (in_tree[e]) out.push_back(c.edges[e].label);
  }
  return out;
}

}  // namespace btq::pi1
