#pragma once

#include "wittkit/abelian.hpp"
#include "wittkit/error.hpp"
#include "wittkit/integer.hpp"
#include "wittkit/smith.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>

namespace wittkit::witt {

enum class DefinedOver { RealGeometricallyConnected, Complex };

/// A real algebraic curve: genus, number of real circles, field of
/// definition, whether its (completed) model is smooth projective, and the
/// number of points removed from it.
struct CurveDescriptor {
  unsigned genus = 0;
  unsigned nu = 0;
  DefinedOver defined_over = DefinedOver::RealGeometricallyConnected;
  bool smooth_projective = true;
  unsigned punctures = 0;

  void validate() const {
    if (defined_over == DefinedOver::Complex && nu != 0)
      throw Error(ErrorKind::InvalidArgument, "a curve defined over C has no real components");
  }
};

/// Image of the signature in Z^nu: sequences whose entries all share one
/// parity. Stored by a basis (columns) so the index can be recomputed.
struct SignatureLattice {
  unsigned nu = 0;
  IntMatrix basis;

  static SignatureLattice for_components(unsigned nu) {
    IntMatrix b(nu, nu);
    for (unsigned i = 0; i < nu; ++i) b(i, 0) = 1;
    for (unsigned i = 1; i < nu; ++i) b(i, i) = 2;
    return {nu, std::move(b)};
  }

  /// The lattice as an abstract group.
  FgAbGroup as_group() const { return FgAbGroup::free(smith_normal_form(basis).rank); }
  /// [Z^nu : lattice], from the Smith form of the inclusion.
  Integer index() const {
    if (nu == 0) return 1;
    Integer idx = 1;
    for (const auto& d : smith_normal_form(basis).invariant_factors()) idx *= d;
    return idx;
  }
  bool contains(const std::vector<Integer>& a) const {
    if (a.size() != nu) return false;
    for (const auto& x : a)
      if (abs(x - a.front()) % 2 != 0) return false;
    return true;
  }
};

struct WittCurveResult {
  FgAbGroup witt;  // W(V) = WR(V)
  FgAbGroup skew;  // -1W(V) = -1WR(V)
  std::optional<SignatureLattice> signature_image;
  std::string split_sequence_note;
  std::string certificate = "W(V) -> WR(V) is an isomorphism for every curve over R";
  std::string provenance;
};

/// Witt group of a smooth projective curve.
inline WittCurveResult witt_curve(const CurveDescriptor& c) {
  c.validate();
  if (!c.smooth_projective || c.punctures != 0)
    throw Error(ErrorKind::Unsupported,
                "explicit Witt groups are only available for smooth projective curves; W(V) = WR(V) still holds");
  WittCurveResult r;
  r.skew = FgAbGroup::trivial();
  if (c.defined_over == DefinedOver::Complex) {
    r.witt = FgAbGroup::elementary(2, 2 * c.genus + 1);
    r.provenance = "complex curve: W(V) = (Z/2)^(2g+1)";
  } else if (c.nu == 0) {
    r.witt = direct_sum(FgAbGroup::cyclic(4), FgAbGroup::elementary(2, c.genus));
    r.provenance = "curve without real points: W(V) = Z/4 (+) (Z/2)^g";
  } else {
    r.signature_image = SignatureLattice::for_components(c.nu);
    r.witt = direct_sum(r.signature_image->as_group(), FgAbGroup::elementary(2, c.genus));
    r.split_sequence_note = "0 -> (Z/2)^" + std::to_string(c.genus) + " -> WR(V) -> Gamma -> 0 (split), Gamma = {a in Z^" +
                            std::to_string(c.nu) + " : all a_i of equal parity}, index " +
                            r.signature_image->index().str();
    r.provenance = "curve with real points: W(V) = Z^nu (+) (Z/2)^g";
  }
  return r;
}

/// KR^0..KR^7 of a smooth projective curve with nu > 0 real circles.
inline std::array<FgAbGroup, 8> kr_curve_table(unsigned g, unsigned nu) {
  if (nu == 0) throw Error(ErrorKind::NoRealPoints, "KR table for curves without real points is not available");
  auto z = [](std::size_t r) { return FgAbGroup::free(r); };
  auto e2 = [](std::size_t k) { return FgAbGroup::elementary(2, k); };
  return {
      direct_sum(z(2), e2(nu - 1)),  // KR^0
      z(g),                          // KR^1
      FgAbGroup::trivial(),          // KR^2
      z(g),                          // KR^3
      z(2),                          // KR^4
      direct_sum(z(g), e2(nu - 1)),  // KR^5
      e2(nu + 1),                    // KR^6
      direct_sum(z(g), e2(nu + 1)),  // KR^7
  };
}

/// K_0(V) surjects onto KR^0(V) with the divisible kernel (R/Z)^g.
inline std::string kr_curve_k0_annotation(unsigned g) {
  return "K_0(V) = KR^0(V) (+) (R/Z)^" + std::to_string(g);
}

/// KR_0 of a smooth affine curve with `lambda` closed real circles, obtained
/// by removing r > 0 points from a projective curve of genus g.
inline FgAbGroup kr_affine_curve_k0(unsigned /*g*/, unsigned lambda, unsigned r) {
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "an affine curve needs at least one puncture");
  return direct_sum(FgAbGroup::free(1), FgAbGroup::elementary(2, lambda));
}

/// 0 -> W'(V) -> WR'(V) -> E -> 0 with E elementary abelian of rank in
/// [rank_min, rank_max].
struct CoWittResult {
  unsigned rank_min = 0;
  unsigned rank_max = 0;
  std::string sequence_note;
  std::string provenance;

  bool rank_exact() const { return rank_min == rank_max; }
  /// Cokernel E when its rank is determined.
  std::optional<FgAbGroup> cokernel() const {
    if (!rank_exact()) return std::nullopt;
    return FgAbGroup::elementary(2, rank_min);
  }
  /// theta' is an isomorphism exactly when E = 0.
  bool theta_iso() const { return rank_max == 0; }
};

inline CoWittResult cowitt_curve(const CurveDescriptor& c) {
  c.validate();
  if (!c.smooth_projective) throw Error(ErrorKind::Unsupported, "co-Witt comparison needs a smooth curve");
  CoWittResult r;
  r.rank_min = c.genus;
  r.rank_max = c.punctures == 0 ? c.genus : c.genus + c.punctures - 1;
  r.sequence_note = "0 -> W'(V) -> WR'(V) -> E -> 0, E of exponent 2";
  r.provenance = c.punctures == 0 ? "projective curve: rank(E) = g" : "affine curve: g <= rank(E) <= g + r - 1";
  return r;
}

/// Shape of W(V) for a smooth projective real surface with c real
/// components: Z^c (+) (Z/2)^m (+) (Z/4)^n when c > 0, and
/// (Z/2)^m (+) (Z/4)^n (+) (Z/8)^t with t <= 1 when c = 0.
inline bool surface_witt_shape_ok(const FgAbGroup& candidate, unsigned c) {
  if (candidate.rank() != c) return false;
  std::size_t eights = 0;
  for (const auto& d : candidate.torsion()) {
    if (d == 2 || d == 4) continue;
    if (d == 8 && c == 0) {
      ++eights;
      continue;
    }
    return false;
  }
  return eights <= 1;
}

}  // namespace wittkit::witt
