#pragma once

#include "wittkit/int_matrix.hpp"

#include <optional>
#include <vector>

namespace wittkit {

/// U * A * V == D with U, V unimodular and D diagonal, d1 | d2 | ... | dr,
/// followed by zeros. The inverses of U and V are tracked alongside so that
/// callers can pull back column spaces without a second elimination.
struct SmithForm {
  IntMatrix U, D, V;
  IntMatrix U_inv, V_inv;
  std::size_t rank = 0;

  /// The nonzero diagonal entries, all positive.
  std::vector<Integer> invariant_factors() const {
    std::vector<Integer> out;
    out.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : s_{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()),
           IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), 0} {}

  SmithForm run() && {
    const std::size_t limit = std::min(s_.D.rows(), s_.D.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!reduce_at(t)) break;
    }
    s_.rank = t;
    return std::move(s_);
  }

 private:
  // Elementary operations keep U, U_inv, V, V_inv consistent with D.
  void row_add(std::size_t dst, std::size_t src, const Integer& k) {
    s_.D.add_row(dst, src, k);
    s_.U.add_row(dst, src, k);
    s_.U_inv.add_col(src, dst, -k);
  }
  void row_swap(std::size_t a, std::size_t b) {
    s_.D.swap_rows(a, b);
    s_.U.swap_rows(a, b);
    s_.U_inv.swap_cols(a, b);
  }
  void row_negate(std::size_t r) {
    s_.D.negate_row(r);
    s_.U.negate_row(r);
    s_.U_inv.negate_col(r);
  }
  void col_add(std::size_t dst, std::size_t src, const Integer& k) {
    s_.D.add_col(dst, src, k);
    s_.V.add_col(dst, src, k);
    s_.V_inv.add_row(src, dst, -k);
  }
  void col_swap(std::size_t a, std::size_t b) {
    s_.D.swap_cols(a, b);
    s_.V.swap_cols(a, b);
    s_.V_inv.swap_rows(a, b);
  }

  std::optional<std::pair<std::size_t, std::size_t>> min_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    const IntMatrix& d = s_.D;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j) {
        if (d(i, j) == 0) continue;
        Integer a = abs(d(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = std::move(a);
          if (best_abs == 1) return best;
        }
      }
    return best;
  }

  // Brings a divisor of the whole trailing block to (t,t) and clears its
  // row and column. Returns false if the trailing block is zero.
  bool reduce_at(std::size_t t) {
    IntMatrix& d = s_.D;
    for (;;) {
      auto piv = min_pivot(t);
      if (!piv) return false;
      row_swap(t, piv->first);
      col_swap(t, piv->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        row_add(i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        col_add(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;  // a smaller remainder is now the pivot candidate

      bool divides_all = true;
      for (std::size_t i = t + 1; i < d.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_add(t, i, 1);
            divides_all = false;
            break;
          }
      if (!divides_all) continue;

      if (d(t, t) < 0) row_negate(t);
      return true;
    }
  }

  SmithForm s_;
};

}  // namespace detail

/// Smith normal form with unimodular transforms.
inline SmithForm smith_normal_form(const IntMatrix& a) {
  return detail::SmithReducer(a).run();
}

}  // namespace wittkit
