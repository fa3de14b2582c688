#pragma once

#include "wittkit/abelian.hpp"
#include "wittkit/error.hpp"
#include "wittkit/integer.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace wittkit::clifford {

enum class Base { Real, Complex, Quaternion };

constexpr unsigned base_dimension(Base b) {
  switch (b) {
    case Base::Real: return 1;
    case Base::Complex: return 2;
    case Base::Quaternion: return 4;
  }
  return 0;
}

constexpr char base_letter(Base b) {
  switch (b) {
    case Base::Real: return 'R';
    case Base::Complex: return 'C';
    case Base::Quaternion: return 'H';
  }
  return '?';
}

/// Wedderburn type of a real Clifford algebra: M_n(D), or M_n(D) x M_n(D)
/// when `split`.
struct CliffordClass {
  Integer matrix_size = 1;
  Base base = Base::Real;
  bool split = false;

  bool operator==(const CliffordClass&) const = default;

  Integer real_dimension() const {
    return matrix_size * matrix_size * base_dimension(base) * (split ? 2 : 1);
  }
  std::size_t simple_module_count() const { return split ? 2 : 1; }
  /// Real dimension of a simple module D^n.
  Integer simple_module_dimension() const { return matrix_size * base_dimension(base); }

  std::string to_string() const {
    std::string one = matrix_size == 1 ? std::string(1, base_letter(base))
                                       : "M_" + matrix_size.str() + "(" + base_letter(base) + ")";
    return split ? one + " x " + one : one;
  }
};

namespace detail {

inline CliffordClass tensor_matrix(CliffordClass c, unsigned k) {
  c.matrix_size *= k;
  return c;
}

// D (x)_R H for D in {R, C, H}.
inline CliffordClass tensor_quaternions(CliffordClass c) {
  switch (c.base) {
    case Base::Real:
      c.base = Base::Quaternion;
      break;
    case Base::Complex:
      c.matrix_size *= 2;
      break;
    case Base::Quaternion:
      c.base = Base::Real;
      c.matrix_size *= 4;
      break;
  }
  return c;
}

}  // namespace detail

/// Classifies C^{p,q}: p generators squaring to -1, q squaring to +1, all
/// anticommuting. Only C^{0,0} = R, C^{1,0} = C and C^{0,1} = R x R are
/// fixed; everything else comes from
///   C^{p+1,q+1} = C^{p,q} (x) M_2(R)
///   C^{0,q+2}   = C^{q,0} (x) M_2(R)
///   C^{p+2,0}   = C^{0,p} (x) H
inline CliffordClass classify_clifford(unsigned p, unsigned q) {
  if (p == 0 && q == 0) return {1, Base::Real, false};
  if (p == 1 && q == 0) return {1, Base::Complex, false};
  if (p == 0 && q == 1) return {1, Base::Real, true};
  if (p >= 1 && q >= 1) return detail::tensor_matrix(classify_clifford(p - 1, q - 1), 2);
  if (p == 0) return detail::tensor_matrix(classify_clifford(q - 2, 0), 2);
  return detail::tensor_quaternions(classify_clifford(0, p - 2));
}

/// Multiplicity matrix of the restriction of simple modules of `from` to
/// simple modules of `to`, rows indexed by simples of `to`.
inline IntMatrix restriction_multiplicities(const CliffordClass& from, const CliffordClass& to) {
  const Integer df = from.simple_module_dimension();
  const Integer dt = to.simple_module_dimension();
  IntMatrix m(to.simple_module_count(), from.simple_module_count());
  if (from.split && to.split) throw Error(ErrorKind::InvalidArgument, "restriction between two split algebras");
  // A non-split source restricts to both simples of a split target equally.
  const Integer denom = to.split ? 2 * dt : dt;
  if (df % denom != 0) throw Error(ErrorKind::InvalidArgument, "simple module dimensions are incommensurable");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = df / denom;
  return m;
}

/// Grothendieck group of the restriction functor E^{p,q+1} -> E^{p,q} on
/// real Clifford modules. It sits in the exact sequence
///   K1(E^{p,q+1}) -> K1(E^{p,q}) -> K^{p,q} -> K0(E^{p,q+1}) -> K0(E^{p,q})
/// where K0 is free on simple modules and K1 of modules over M_n(D) is
/// Z/2, 0, 0 for D = R, C, H. The kernel term is free, so the extension
/// splits. The result is KO^{p-q}(pt) = KO_{q-p}.
inline FgAbGroup abs_k_group(unsigned p, unsigned q) {
  const CliffordClass big = classify_clifford(p, q + 1);
  const CliffordClass small = classify_clifford(p, q);
  const IntMatrix mult = restriction_multiplicities(big, small);

  PresentedHom res0{{IntMatrix(mult.cols(), 0)}, {IntMatrix(mult.rows(), 0)}, mult};
  const FgAbGroup ker0 = hom_kernel_cokernel(res0).kernel;

  // K1 only sees simple modules over R; their multiplicities act mod 2.
  auto real_simples = [](const CliffordClass& c) {
    return c.base == Base::Real ? c.simple_module_count() : std::size_t{0};
  };
  const std::size_t src1 = real_simples(big);
  const std::size_t dst1 = real_simples(small);
  auto two = [](std::size_t n) {
    IntMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = 2;
    return r;
  };
  IntMatrix lift1(dst1, src1);
  if (src1 && dst1) lift1 = mult;
  const FgAbGroup coker1 = hom_kernel_cokernel({{two(src1)}, {two(dst1)}, lift1}).cokernel;

  return direct_sum(coker1, ker0);
}

}  // namespace wittkit::clifford
