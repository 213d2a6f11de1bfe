#include "btq/smith.hpp"

#include <sstream>

namespace btq::pi1 {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  }
  return out;
}

mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix exponent_matrix(const Presentation& p) {
  p.check();
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (auto x : p.relators[r]) m(r, generator_of(x)) += is_inverse(x) ? -1 : 1;
  }
  return m;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_dst += q * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool empty = false;
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          if (pi == rows || mpz_cmpabs(s(i, j).get_mpz_t(), s(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) {
        empty = true;
        break;
      }
      swap_rows(s, t, pi);
      swap_rows(u, t, pi);
      swap_cols(s, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        const mpz_class q = s(i, t) / s(t, t);
        add_row(s, i, t, -q);
        add_row(u, i, t, -q);
        clean = clean && s(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        const mpz_class q = s(t, j) / s(t, t);
        add_col(s, j, t, -q);
        add_col(v, j, t, -q);
        clean = clean && s(t, j) == 0;
      }
      if (!clean) continue;

      // The pivot must divide every remaining entry.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      add_row(s, t, bad, 1);
      add_row(u, t, bad, 1);
    }
    if (empty) break;
    if (s(t, t) < 0) {
      add_row(s, t, t, -2);
      add_row(u, t, t, -2);
    }
  }
  return {s, u, v};
}

std::vector<mpz_class> SmithForm::invariants() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i) {
    if (diagonal(i, i) != 0) out.push_back(diagonal(i, i));
  }
  return out;
}

bool SmithForm::verify(const IntMatrix& m) const {
  if (left * m * right != diagonal) return false;
  if (abs(left.determinant()) != 1 || abs(right.determinant()) != 1) return false;
  for (std::size_t i = 0; i < diagonal.rows(); ++i) {
    for (std::size_t j = 0; j < diagonal.cols(); ++j) {
      if (i != j && diagonal(i, j) != 0) return false;
    }
  }
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n; ++i) {
    if (diagonal(i, i) < 0) return false;
    if (i + 1 < n) {
      const mpz_class& a = diagonal(i, i);
      const mpz_class& b = diagonal(i + 1, i + 1);
      if (a == 0 ? b != 0 : !mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) return false;
    }
  }
  return true;
}

std::string Abelianization::order() const {
  if (free_rank > 0) return "infinite";
  mpz_class n = 1;
  for (const auto& f : factors) n *= f;
  return n.get_str();
}

Abelianization abelianization(const Presentation& p) {
  const IntMatrix m = exponent_matrix(p);
  const SmithForm s = smith_normal_form(m);
  Abelianization out;
  const auto inv = s.invariants();
  for (const auto& d : inv) {
    if (d > 1) out.factors.push_back(d);
  }
  out.free_rank = p.generators.size() - inv.size();
  return out;
}

}  // namespace btq::pi1
