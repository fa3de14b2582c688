#pragma once

#include "wittkit/error.hpp"
#include "wittkit/int_matrix.hpp"
#include "wittkit/integer.hpp"
#include "wittkit/smith.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wittkit {

/// A finitely generated abelian group Z^rank (+) Z/d1 (+) ... (+) Z/dk in
/// invariant-factor form: every di >= 2 and di | di+1. Any list of cyclic
/// orders is accepted on construction and normalized immediately, so two
/// values compare equal exactly when the groups are isomorphic.
class FgAbGroup {
 public:
  FgAbGroup() = default;

  /// Z^rank (+) Z/o1 (+) Z/o2 (+) ...; an order of 0 contributes a free
  /// summand, orders of +-1 are dropped.
  explicit FgAbGroup(std::size_t rank, std::vector<Integer> cyclic_orders = {}) : rank_(rank) {
    for (auto& o : cyclic_orders) {
      o = abs(o);
      if (o == 0)
        ++rank_;
      else if (o != 1)
        torsion_.push_back(std::move(o));
    }
    normalize();
  }

  static FgAbGroup trivial() { return FgAbGroup(); }
  static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank); }
  static FgAbGroup cyclic(const Integer& order) { return FgAbGroup(0, {order}); }
  /// (Z/n)^count
  static FgAbGroup elementary(const Integer& n, std::size_t count) {
    return FgAbGroup(0, std::vector<Integer>(count, n));
  }

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }

  bool is_trivial() const noexcept { return rank_ == 0 && torsion_.empty(); }
  bool is_finite() const noexcept { return rank_ == 0; }

  /// Order of the group, or nullopt when it has positive rank.
  std::optional<Integer> order() const {
    if (rank_ > 0) return std::nullopt;
    Integer n = 1;
    for (const auto& d : torsion_) n *= d;
    return n;
  }

  FgAbGroup torsion_subgroup() const { return FgAbGroup(0, torsion_); }

  bool operator==(const FgAbGroup&) const = default;

  /// "0" for the trivial group; otherwise "Z^r" followed by the torsion
  /// factors, all joined with " (+) ".
  std::string to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    if (rank_ > 0) out = "Z^" + std::to_string(rank_);
    for (const auto& d : torsion_) {
      if (!out.empty()) out += " (+) ";
      out += "Z/" + d.str();
    }
    return out;
  }

 private:
  void normalize() {
    // Pairwise (a, b) -> (gcd, lcm) until the list is a divisibility chain.
    auto& t = torsion_;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        if (t[j] % t[i] == 0) continue;
        Integer g = gcd(t[i], t[j]);
        Integer l = t[i] / g * t[j];
        t[i] = std::move(g);
        t[j] = std::move(l);
      }
    std::erase_if(t, [](const Integer& x) { return x == 1; });
    std::sort(t.begin(), t.end());
  }

  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Exponent of a group: the least e >= 1 with e*g = 0 for all g, or
/// infinite when the rank is positive.
struct Exponent {
  std::optional<Integer> value;  // nullopt means INFINITE

  bool is_infinite() const noexcept { return !value.has_value(); }
  bool operator==(const Exponent&) const = default;
  std::string to_string() const { return value ? value->str() : "INFINITE"; }
};

inline Exponent exponent(const FgAbGroup& g) {
  if (g.rank() > 0) return {};
  if (g.torsion().empty()) return {Integer(1)};
  return {g.torsion().back()};
}

inline FgAbGroup direct_sum(const FgAbGroup& g, const FgAbGroup& h) {
  std::vector<Integer> t = g.torsion();
  t.insert(t.end(), h.torsion().begin(), h.torsion().end());
  return FgAbGroup(g.rank() + h.rank(), std::move(t));
}

/// Z^rows / im(A), where A presents a map Z^cols -> Z^rows.
inline FgAbGroup cokernel(const IntMatrix& a) {
  if (a.cols() == 0) return FgAbGroup::free(a.rows());
  SmithForm s = smith_normal_form(a);
  return FgAbGroup(a.rows() - s.rank, s.invariant_factors());
}

/// Group Z^generators / im(relations). `relations` has one column per relation.
struct Presentation {
  IntMatrix relations;

  static Presentation of(const FgAbGroup& g) {
    const std::size_t n = g.rank() + g.torsion().size();
    IntMatrix r(n, g.torsion().size());
    for (std::size_t k = 0; k < g.torsion().size(); ++k) r(g.rank() + k, k) = g.torsion()[k];
    return {std::move(r)};
  }

  std::size_t generators() const noexcept { return relations.rows(); }
  FgAbGroup group() const { return cokernel(relations); }
};

namespace detail {

// Solves relations * X = targets over the integers, column by column.
// Returns nullopt if some column of targets is not in the relation lattice.
inline std::optional<IntMatrix> solve_in_lattice(const IntMatrix& relations, const IntMatrix& targets) {
  const std::size_t m = relations.rows();
  if (targets.rows() != m) throw Error(ErrorKind::InvalidArgument, "row mismatch in lattice solve");
  if (relations.cols() == 0) {
    if (!targets.is_zero()) return std::nullopt;
    return IntMatrix(0, targets.cols());
  }
  SmithForm s = smith_normal_form(relations);
  IntMatrix y = s.U * targets;
  IntMatrix z(relations.cols(), targets.cols());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < targets.cols(); ++j) {
      if (i < s.rank) {
        if (y(i, j) % s.D(i, i) != 0) return std::nullopt;
        z(i, j) = y(i, j) / s.D(i, i);
      } else if (y(i, j) != 0) {
        return std::nullopt;
      }
    }
  return s.V * z;
}

// Basis (as columns) of the lattice spanned by the columns of `gens`.
inline IntMatrix lattice_basis(const IntMatrix& gens) {
  if (gens.cols() == 0) return IntMatrix(gens.rows(), 0);
  SmithForm s = smith_normal_form(gens);
  IntMatrix basis(gens.rows(), s.rank);
  for (std::size_t k = 0; k < s.rank; ++k)
    for (std::size_t i = 0; i < gens.rows(); ++i) basis(i, k) = s.U_inv(i, k) * s.D(k, k);
  return basis;
}

// Integer kernel of `a` as columns.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  if (a.rows() == 0) return IntMatrix::identity(a.cols());
  SmithForm s = smith_normal_form(a);
  return s.V.col_block(s.rank, a.cols() - s.rank);
}

}  // namespace detail

/// A homomorphism between presented groups, given by a lift
/// Z^source.generators -> Z^target.generators (target x source matrix).
struct PresentedHom {
  Presentation source;
  Presentation target;
  IntMatrix lift;

  /// The lift carries source relations into the target's relation lattice.
  bool is_compatible() const {
    if (lift.rows() != target.generators() || lift.cols() != source.generators()) return false;
    return detail::solve_in_lattice(target.relations, lift * source.relations).has_value();
  }
};

struct KernelCokernel {
  FgAbGroup kernel;
  FgAbGroup cokernel;
};

/// Kernel and cokernel of the homomorphism induced by a compatible lift.
inline KernelCokernel hom_kernel_cokernel(const PresentedHom& f) {
  if (!f.is_compatible())
    throw Error(ErrorKind::IncompatibleLift, "lift does not map source relations into target relations");
  const IntMatrix& rs = f.source.relations;
  const IntMatrix& rt = f.target.relations;
  const std::size_t a = f.source.generators();

  FgAbGroup coker = cokernel(hcat(rt, f.lift));

  // Preimage lattice {x : F x in im(Rt)} is the projection of ker [F | Rt].
  IntMatrix ker = detail::integer_kernel(hcat(f.lift, rt));
  IntMatrix basis = detail::lattice_basis(ker.row_block(0, a));
  if (basis.cols() == 0) return {FgAbGroup::trivial(), std::move(coker)};
  auto coords = detail::solve_in_lattice(basis, rs);
  if (!coords) throw Error(ErrorKind::IncompatibleLift, "source relations escape the preimage lattice");
  return {cokernel(*coords), std::move(coker)};
}

/// Endomorphism of `g` in its canonical presentation, with the given lift.
inline PresentedHom endomorphism(const FgAbGroup& g, IntMatrix lift) {
  Presentation p = Presentation::of(g);
  return {p, p, std::move(lift)};
}

/// Recognizes the subgroup generated by `gens` inside an abelian group given
/// by `op`. Generators already in the span are skipped; each new generator s
/// contributes the relation m*s = (element already enumerated), where m is
/// the least positive multiple landing in the span. The relation lattice is
/// then reduced by Smith normal form.
template <class Elem, class Op, class Hash = std::hash<Elem>>
FgAbGroup recognize_generated(std::span<const Elem> gens, const Elem& identity, Op op,
                              std::size_t max_order = std::size_t{1} << 22) {
  std::vector<Elem> elems{identity};
  std::unordered_map<Elem, std::uint32_t, Hash> index;
  index.emplace(identity, 0);
  std::vector<std::size_t> radix;
  std::vector<std::vector<Integer>> relation_cols;  // coordinates in generator basis

  auto coords_of = [&](std::uint32_t idx) {
    std::vector<Integer> c(radix.size() + 1);
    for (std::size_t i = 0; i < radix.size(); ++i) {
      c[i] = idx % radix[i];
      idx /= static_cast<std::uint32_t>(radix[i]);
    }
    return c;
  };

  for (const Elem& s : gens) {
    if (index.count(s)) continue;
    std::size_t m = 1;
    Elem x = s;
    for (auto it = index.find(x); it == index.end(); it = index.find(x)) {
      x = op(x, s);
      ++m;
      if (m * elems.size() > max_order)
        throw Error(ErrorKind::TooLarge, "generated subgroup exceeds enumeration limit");
    }
    std::vector<Integer> rel = coords_of(index.at(x));
    for (auto& v : rel) v = -v;
    rel.back() = m;
    relation_cols.push_back(std::move(rel));

    const std::size_t old = elems.size();
    elems.reserve(old * m);
    Elem step = s;
    for (std::size_t j = 1; j < m; ++j) {
      for (std::size_t h = 0; h < old; ++h) {
        Elem e = op(elems[h], step);
        index.emplace(e, static_cast<std::uint32_t>(elems.size()));
        elems.push_back(std::move(e));
      }
      step = op(step, s);
    }
    radix.push_back(m);
  }

  const std::size_t k = radix.size();
  IntMatrix rel(k, k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < relation_cols[c].size(); ++r) rel(r, c) = relation_cols[c][r];
  return cokernel(rel);
}

/// Structure of a finite abelian group given by its Cayley table
/// (table[a][b] = a*b over {0..n-1}).
inline FgAbGroup recognize_finite_abelian(const std::vector<std::vector<std::size_t>>& table, std::size_t identity) {
  const std::size_t n = table.size();
  if (n == 0 || identity >= n) throw Error(ErrorKind::NotAGroup, "empty table or identity out of range");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::NotAGroup, "table is not square");
    for (std::size_t v : row)
      if (v >= n) throw Error(ErrorKind::NotAGroup, "table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table[identity][a] != a || table[a][identity] != a)
      throw Error(ErrorKind::NotAGroup, "identity element is not neutral");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b)
      has_inverse = table[a][b] == identity && table[b][a] == identity;
    if (!has_inverse) throw Error(ErrorKind::NotAGroup, "element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorKind::NotAGroup, "operation is not associative");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (table[a][b] != table[b][a]) throw Error(ErrorKind::NotAbelian, "operation is not commutative");

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return recognize_generated<std::size_t>(std::span<const std::size_t>(all), identity,
                                          [&](std::size_t x, std::size_t y) { return table[x][y]; });
}

}  // namespace wittkit
