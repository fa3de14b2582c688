#pragma once

// The real Clifford algebra C^{p,q} built from its multiplication table on
// the 2^(p+q) basis blades: e_1..e_p square to -1, e_{p+1}..e_{p+q} to +1,
// distinct generators anticommute. Invariants read off the table:
//   * dimension of the center (rational null space of x -> g x - x g),
//   * number of central primitive idempotents (2 when the center is R x R),
//   * signature of the trace form (x, y) -> Tr(L_xy) divided by the dimension.
// These three separate every Wedderburn type of a given real dimension.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

class CliffordTable {
 public:
  CliffordTable(unsigned p, unsigned q) : p_(p), n_(p + q), dim_(std::size_t{1} << (p + q)) {}

  std::size_t dim() const { return dim_; }
  unsigned generators() const { return n_; }

  /// e_a * e_b = sign * e_(a xor b) for blades a, b given as bit masks.
  int sign(std::uint32_t a, std::uint32_t b) const {
    int s = 1;
    // reorder: every generator of b passes the higher generators of a
    for (unsigned i = 0; i < n_; ++i)
      if ((b >> i) & 1)
        if (std::popcount(a >> (i + 1)) % 2) s = -s;
    // contract repeated generators
    const std::uint32_t common = a & b;
    for (unsigned i = 0; i < n_; ++i)
      if (((common >> i) & 1) && i < p_) s = -s;
    return s;
  }

  using Vec = std::vector<Rational>;

  Vec multiply(const Vec& x, const Vec& y) const {
    Vec z(dim_);
    for (std::uint32_t a = 0; a < dim_; ++a) {
      if (x[a] == 0) continue;
      for (std::uint32_t b = 0; b < dim_; ++b)
        if (y[b] != 0) z[a ^ b] += Rational(sign(a, b)) * x[a] * y[b];
    }
    return z;
  }

  Vec basis(std::uint32_t a) const {
    Vec v(dim_);
    v[a] = 1;
    return v;
  }

 private:
  unsigned p_, n_;
  std::size_t dim_;
};

/// Null space of a rational matrix (rows of equal length).
inline std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational k = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(cols);
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Signature of a symmetric rational matrix by symmetric elimination.
inline int signature(std::vector<std::vector<Rational>> g) {
  const std::size_t n = g.size();
  int sig = 0;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> piv;
    for (std::size_t i = 0; i < n && !piv; ++i)
      if (!done[i] && g[i][i] != 0) piv = i;
    if (!piv) {
      // all remaining diagonal entries vanish: combine two coordinates
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = 0; i < n && !off; ++i)
        for (std::size_t j = 0; j < n && !off; ++j)
          if (!done[i] && !done[j] && i != j && g[i][j] != 0) off = std::make_pair(i, j);
      if (!off) break;
      auto [i, j] = *off;
      for (std::size_t k = 0; k < n; ++k) g[i][k] += g[j][k];
      for (std::size_t k = 0; k < n; ++k) g[k][i] += g[k][j];
      piv = i;
    }
    const std::size_t k = *piv;
    sig += g[k][k] > 0 ? 1 : -1;
    done[k] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || g[i][k] == 0) continue;
      const Rational f = g[i][k] / g[k][k];
      for (std::size_t j = 0; j < n; ++j) g[i][j] -= f * g[k][j];
      for (std::size_t j = 0; j < n; ++j) g[j][i] -= f * g[j][k];
    }
  }
  return sig;
}

struct CliffordInvariants {
  std::size_t dimension = 0;
  std::size_t center_dimension = 0;
  std::size_t central_idempotents = 0;
  int trace_signature = 0;
};

inline CliffordInvariants clifford_structure_constants(unsigned p, unsigned q) {
  const CliffordTable t(p, q);
  const std::size_t d = t.dim();
  CliffordInvariants inv;
  inv.dimension = d;

  // x central  <=>  g x - x g = 0 for every generator g
  std::vector<std::vector<Rational>> eqs;
  for (unsigned i = 0; i < t.generators(); ++i) {
    const std::uint32_t g = std::uint32_t{1} << i;
    // coefficient of e_(g xor a) in g e_a - e_a g, one equation per output blade
    std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d));
    for (std::uint32_t a = 0; a < d; ++a) rows[g ^ a][a] += t.sign(g, a) - t.sign(a, g);
    for (auto& r : rows) eqs.push_back(std::move(r));
  }
  const auto center = null_space(eqs, d);
  inv.center_dimension = center.size();

  if (center.size() == 1) {
    inv.central_idempotents = 1;
  } else if (center.size() == 2) {
    // take z in the center outside R*1, with no scalar part, and write
    // z^2 = a + b z; the center is R x R when b^2 + 4a > 0 and C when < 0
    auto has_vector_part = [](const std::vector<Rational>& v) {
      return std::any_of(v.begin() + 1, v.end(), [](const Rational& r) { return r != 0; });
    };
    auto z = has_vector_part(center[0]) ? center[0] : center[1];
    z[0] = 0;
    const auto z2 = t.multiply(z, z);
    std::size_t k = 1;
    while (z[k] == 0) ++k;
    const Rational b = z2[k] / z[k];
    const Rational a = z2[0];
    inv.central_idempotents = b * b + 4 * a > 0 ? 2 : 1;
  }

  // Gram matrix of the trace form scaled by 1/dim; Tr(L_x) is read from the
  // diagonal of left multiplication by x
  auto trace_of_blade = [&](std::uint32_t m) {
    Rational tr = 0;
    for (std::uint32_t c = 0; c < d; ++c)
      if ((m ^ c) == c) tr += t.sign(m, c);
    return tr;
  };
  std::vector<std::vector<Rational>> gram(d, std::vector<Rational>(d));
  for (std::uint32_t a = 0; a < d; ++a)
    for (std::uint32_t b = 0; b < d; ++b) gram[a][b] = Rational(t.sign(a, b)) * trace_of_blade(a ^ b) / d;
  inv.trace_signature = signature(gram);
  return inv;
}

/// A Wedderburn type M_k(D) or M_k(D) x M_k(D) of a given real dimension.
struct WedderburnCandidate {
  std::size_t matrix_size;
  char base;  // 'R', 'C' or 'H'
  bool split;
};

/// Invariants predicted for a Wedderburn type.
inline CliffordInvariants predicted(const WedderburnCandidate& c) {
  const std::size_t k = c.matrix_size, copies = c.split ? 2 : 1;
  const std::size_t bd = c.base == 'R' ? 1 : c.base == 'C' ? 2 : 4;
  CliffordInvariants inv;
  inv.dimension = k * k * bd * copies;
  inv.center_dimension = (c.base == 'C' ? 2 : 1) * copies;
  inv.central_idempotents = copies;
  const int one = c.base == 'R' ? static_cast<int>(k) : c.base == 'C' ? 0 : -2 * static_cast<int>(k);
  inv.trace_signature = one * static_cast<int>(copies);
  return inv;
}

/// All Wedderburn types (C x C excluded) whose invariants equal `inv`.
inline std::vector<WedderburnCandidate> matching_types(const CliffordInvariants& inv) {
  std::vector<WedderburnCandidate> out;
  for (char base : {'R', 'C', 'H'})
    for (bool split : {false, true}) {
      if (base == 'C' && split) continue;
      for (std::size_t k = 1; k * k <= inv.dimension; ++k) {
        const WedderburnCandidate c{k, base, split};
        const auto pr = predicted(c);
        if (pr.dimension == inv.dimension && pr.center_dimension == inv.center_dimension &&
            pr.central_idempotents == inv.central_idempotents && pr.trace_signature == inv.trace_signature)
          out.push_back(c);
      }
    }
  return out;
}

}  // namespace oracle
