#include "btq/todd_coxeter.hpp"

#include <vector>

namespace btq::pi1 {

namespace {

constexpr std::size_t kUndefined = static_cast<std::size_t>(-1);

class CosetTable {
 public:
  CosetTable(std::size_t columns, std::size_t max_cosets) : cols_(columns), max_(max_cosets) {
    new_row();
  }

  std::size_t columns() const { return cols_; }
  std::size_t allocated() const { return parent_.size(); }
  bool overflow() const { return overflow_; }

  std::size_t& at(std::size_t c, Letter x) { return table_[c * cols_ + x]; }
  bool alive(std::size_t c) const { return parent_[c] == c; }

  // Returns false on overflow.
  bool define(std::size_t c, Letter x) {
    if (allocated() >= max_) {
      overflow_ = true;
      return false;
    }
    const std::size_t d = new_row();
    at(c, x) = d;
    at(d, invert(x)) = c;
    return true;
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::size_t g = queue[i];
      for (Letter x = 0; x < cols_; ++x) {
        const std::size_t d = at(g, x);
        if (d == kUndefined) continue;
        if (at(d, invert(x)) == g) at(d, invert(x)) = kUndefined;
        const std::size_t mu = rep(g);
        const std::size_t nu = rep(d);
        if (at(mu, x) != kUndefined) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, invert(x)) != kUndefined) {
          merge(mu, at(nu, invert(x)), queue);
        } else {
          at(mu, x) = nu;
          at(nu, invert(x)) = mu;
        }
      }
    }
  }

  void scan_and_fill(std::size_t alpha, const Word& w) {
    if (w.empty()) return;
    std::size_t f = alpha, b = alpha;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i..j)
    while (true) {
      while (i < j && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, invert(w[j - 1])) != kUndefined) b = at(b, invert(w[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, invert(w[i])) = f;
        return;
      }
      if (!define(f, w[i])) return;
    }
  }

  std::size_t live_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) n += alive(c);
    return n;
  }

 private:
  std::size_t new_row() {
    const std::size_t d = parent_.size();
    parent_.push_back(d);
    table_.resize(table_.size() + cols_, kUndefined);
    return d;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    const std::size_t a = rep(k), b = rep(l);
    if (a == b) return;
    const std::size_t lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    queue.push_back(hi);
  }

  std::size_t cols_;
  std::size_t max_;
  bool overflow_ = false;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> parent_;
};

}  // namespace

CosetEnumeration todd_coxeter(const Presentation& p, std::size_t max_cosets, std::size_t cell_cap,
                              std::stop_token stop) {
  p.check();
  CosetEnumeration out;
  const std::size_t cols = 2 * p.generators.size();
  if (cols == 0) {
    out.order = 1;
    out.cosets_defined = 1;
    return out;
  }
  const std::size_t limit = std::min(max_cosets, cell_cap / cols);
  if (limit == 0) return out;

  std::vector<Word> relators;
  for (const auto& r : p.relators) {
    Word w = cyclic_reduce(r);
    if (!w.empty()) relators.push_back(std::move(w));
  }

  CosetTable t(cols, limit);
  for (std::size_t alpha = 0; alpha < t.allocated(); ++alpha) {
    if (stop.stop_requested()) {
      out.cancelled = true;
      break;
    }
    if (!t.alive(alpha)) continue;
    for (const auto& r : relators) {
      t.scan_and_fill(alpha, r);
      if (t.overflow() || !t.alive(alpha)) break;
    }
    if (t.overflow()) break;
    if (!t.alive(alpha)) continue;
    for (Letter x = 0; x < cols; ++x) {
      if (t.at(alpha, x) == kUndefined && !t.define(alpha, x)) break;
    }
    if (t.overflow()) break;
  }
  out.cosets_defined = t.allocated();
  out.peak_cells = t.allocated() * cols;
  if (!t.overflow() && !out.cancelled) out.order = t.live_count();
  return out;
}

}  // namespace btq::pi1
