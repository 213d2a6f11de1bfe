#pragma once

// Exact integer matrices, Smith normal form and abelianization.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "btq/presentation.hpp"

namespace btq::pi1 {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  /// Exact determinant by fraction-free elimination; square matrices only.
  mpz_class determinant() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Relator-by-generator exponent sums.
IntMatrix exponent_matrix(const Presentation& p);

/// U * m * V == diagonal, with U and V unimodular and d1 | d2 | ... >= 0.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;   // U
  IntMatrix right;  // V
  std::vector<mpz_class> invariants() const;  // nonzero diagonal entries
  /// Checks the product, unimodularity and the divisibility chain.
  bool verify(const IntMatrix& m) const;
};

/// Pivots on the entry of least nonzero absolute value.
SmithForm smith_normal_form(const IntMatrix& m);

struct Abelianization {
  std::vector<mpz_class> factors;  // invariant factors > 1
  std::size_t free_rank = 0;
  bool operator==(const Abelianization&) const = default;
  /// Order as a string, "infinite" when the free rank is positive.
  std::string order() const;
};

Abelianization abelianization(const Presentation& p);

}  // namespace btq::pi1
