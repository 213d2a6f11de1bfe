#pragma once

// Coset enumeration over the trivial subgroup (HLT strategy, no lookahead).

#include <cstddef>
#include <optional>
#include <stop_token>

#include "btq/presentation.hpp"

namespace btq::pi1 {

constexpr std::size_t kDefaultCellCap = 1'000'000;

struct CosetEnumeration {
  /// Group order when the table closed; empty on overflow or cancellation.
  std::optional<std::size_t> order;
  bool cancelled = false;
  std::size_t cosets_defined = 0;
  std::size_t peak_cells = 0;  // table cells allocated at the high-water mark
};

/// Enumerates cosets of the trivial subgroup. Overflow is reported when more
/// than max_cosets cosets or more than cell_cap table cells would be needed.
/// The stop token is checked once per coset row.
CosetEnumeration todd_coxeter(const Presentation& p, std::size_t max_cosets,
                              std::size_t cell_cap = kDefaultCellCap, std::stop_token stop = {});

}  // namespace btq::pi1
