#pragma once

// Finite group presentations. A letter is encoded as 2*g for generator g and
// 2*g+1 for its inverse, so `letter ^ 1` inverts it.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "btq/cw.hpp"

namespace btq::pi1 {

class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Letter = std::size_t;
using Word = std::vector<Letter>;

constexpr Letter gen_letter(std::size_t g, bool inverse = false) { return 2 * g + (inverse ? 1 : 0); }
constexpr std::size_t generator_of(Letter x) { return x / 2; }
constexpr bool is_inverse(Letter x) { return x & 1u; }
constexpr Letter invert(Letter x) { return x ^ 1u; }

Word inverse(const Word& w);
/// Cancels adjacent x x^-1 pairs.
Word free_reduce(const Word& w);
/// Free reduction followed by cancellation across the ends.
Word cyclic_reduce(const Word& w);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t total_length() const;
  /// Throws PresentationError if a relator uses an unknown generator.
  void check() const;
  std::string word_to_string(const Word& w) const;
  /// Space-separated generator labels, `'` suffix for inverses.
  Word parse_word(const std::string& text) const;
};

/// Relators are stored freely reduced.
Presentation make_presentation(std::vector<std::string> generators, const std::vector<std::string>& relators);

/// `gens: a b c` followed by `rel: a a b'` lines.
std::string to_text(const Presentation& p);
Presentation presentation_from_text(const std::string& text);

/// Generators are the edges outside a BFS spanning tree rooted at the
/// basepoint (neighbours taken in label order); relators are the boundary
/// words with tree edges deleted. Throws PresentationError if disconnected.
Presentation presentation_from_complex(const cw::Complex& c, const std::string& basepoint);

/// Tree edges chosen by presentation_from_complex, by label.
std::vector<std::string> spanning_tree_edges(const cw::Complex& c, const std::string& basepoint);

}  // namespace btq::pi1
