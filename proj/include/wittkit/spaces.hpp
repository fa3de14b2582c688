#pragma once

#include "wittkit/abelian.hpp"
#include "wittkit/error.hpp"
#include "wittkit/integer.hpp"
#include "wittkit/tables.hpp"

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace wittkit::spaces {

/// Mod-2 cohomology of a connected complex of dimension <= 3: b1 = dim H^1,
/// b2 = dim H^2, and the cup product H^1 x H^1 -> H^2 as a b1 x b1 array of
/// bit vectors of length b2 (entry [i][j] is x_i x_j).
struct LowDimCohomology {
  unsigned b1 = 0;
  unsigned b2 = 0;
  std::vector<std::vector<std::vector<int>>> cup;

  /// All-zero cup product.
  static LowDimCohomology untwisted(unsigned b1, unsigned b2) {
    return {b1, b2, std::vector(b1, std::vector(b1, std::vector<int>(b2, 0)))};
  }

  void validate() const {
    if (cup.size() != b1) throw Error(ErrorKind::InvalidArgument, "cup must be a b1 x b1 array");
    for (unsigned i = 0; i < b1; ++i) {
      if (cup[i].size() != b1) throw Error(ErrorKind::InvalidArgument, "cup must be a b1 x b1 array");
      for (unsigned j = 0; j < b1; ++j) {
        if (cup[i][j].size() != b2) throw Error(ErrorKind::InvalidArgument, "cup entries must have length b2");
        for (unsigned k = 0; k < b2; ++k) {
          if (cup[i][j][k] != 0 && cup[i][j][k] != 1)
            throw Error(ErrorKind::InvalidArgument, "cup entries must be 0 or 1");
          if (cup[i][j][k] != cup[j][i][k]) throw Error(ErrorKind::InvalidArgument, "cup product must be symmetric");
        }
      }
    }
  }
};

/// The twisted group law on H^1 x H^2, elements packed as w1 | (w2 << b1):
///   (w1, w2) * (w1', w2') = (w1 + w1', w2 + w2' + w1 w1').
class TwistedLaw {
 public:
  static constexpr unsigned kMaxBits = 20;

  explicit TwistedLaw(const LowDimCohomology& c) : b1_(c.b1), b2_(c.b2), cup_(c.b1 * c.b1, 0) {
    c.validate();
    if (c.b1 + c.b2 > kMaxBits)
      throw Error(ErrorKind::TooLarge, "2^(b1+b2) exceeds 2^20 elements");
    for (unsigned i = 0; i < b1_; ++i)
      for (unsigned j = 0; j < b1_; ++j)
        for (unsigned k = 0; k < b2_; ++k)
          if (c.cup[i][j][k]) cup_[i * b1_ + j] |= std::uint64_t{1} << k;
  }

  unsigned b1() const noexcept { return b1_; }
  unsigned b2() const noexcept { return b2_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << (b1_ + b2_); }

  std::uint64_t operator()(std::uint64_t x, std::uint64_t y) const {
    const std::uint64_t low = (std::uint64_t{1} << b1_) - 1;
    const std::uint64_t x1 = x & low, y1 = y & low;
    std::uint64_t w2 = (x >> b1_) ^ (y >> b1_);
    for (unsigned i = 0; i < b1_; ++i) {
      if (!((x1 >> i) & 1)) continue;
      for (unsigned j = 0; j < b1_; ++j)
        if ((y1 >> j) & 1) w2 ^= cup_[i * b1_ + j];
    }
    return (x1 ^ y1) | (w2 << b1_);
  }

  std::vector<std::uint64_t> basis() const {
    std::vector<std::uint64_t> g;
    for (unsigned i = 0; i < b1_ + b2_; ++i) g.push_back(std::uint64_t{1} << i);
    return g;
  }

 private:
  unsigned b1_, b2_;
  std::vector<std::uint64_t> cup_;
};

/// Reduced KO of a connected complex of dimension <= 3, from the collapsed
/// Atiyah-Hirzebruch spectral sequence with the Stiefel-Whitney group law.
inline FgAbGroup ko_low_dim_reduced(const LowDimCohomology& c) {
  TwistedLaw law(c);
  const auto gens = law.basis();
  return recognize_generated<std::uint64_t>(std::span<const std::uint64_t>(gens), 0, law,
                                            std::size_t{1} << TwistedLaw::kMaxBits);
}

/// Number of 1 <= i <= d with i = 0, 1, 2 or 4 (mod 8).
inline unsigned f_of(std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "f(d) needs d >= 1");
  unsigned count = 0;
  for (std::int64_t i = 1; i <= d; ++i) {
    const auto r = i % 8;
    if (r == 0 || r == 1 || r == 2 || r == 4) ++count;
  }
  return count;
}

/// KO(RP^d) = Z (+) Z/2^f(d).
inline FgAbGroup ko_projective_space(std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "projective dimension must be >= 1");
  return FgAbGroup(1, {pow2(f_of(d))});
}

/// S^{p,0}: the sphere S^{p-1} with the antipodal involution.
struct SphereDescriptor {
  std::int64_t p = 1;
};

/// KR^n(S^{p,0}) = KO^n(pt) (+) KO^{n+p+1}(pt), valid for p >= 3.
inline FgAbGroup kr_antipodal_sphere(const SphereDescriptor& s, std::int64_t n) {
  if (s.p < 3) throw Error(ErrorKind::SmallP, "the KR splitting of S^{p,0} needs p >= 3");
  return direct_sum(tables::ko_cohomological(n), tables::ko_cohomological(n + s.p + 1));
}

struct WRExact {
  FgAbGroup group;
};
struct WRAmbiguous {
  FgAbGroup larger;   // Z/2^f
  FgAbGroup smaller;  // Z/2^(f-1)
};

/// The Real Witt group when it is pinned down, or the two candidates when
/// only the range is known.
struct WRResult {
  std::variant<WRExact, WRAmbiguous> value;

  bool is_exact() const { return std::holds_alternative<WRExact>(value); }
  const FgAbGroup& exact() const { return std::get<WRExact>(value).group; }
  const WRAmbiguous& ambiguous() const { return std::get<WRAmbiguous>(value); }
};

/// WR(S^{p,0}) for the antipodal sphere. Exact for p = 0, 1, 2, 4 (mod 8)
/// and for p = 3 (the Riemann sphere without real points, Z/4); otherwise
/// the two candidates Z/2^f and Z/2^(f-1) with f = f(p-1).
inline WRResult wr_antipodal_sphere(const SphereDescriptor& s) {
  if (s.p < 2) throw Error(ErrorKind::SmallP, "WR(S^{p,0}) needs p >= 2");
  const unsigned f = f_of(s.p - 1);
  const auto r = s.p % 8;
  if (r == 0 || r == 1 || r == 2 || r == 4) return {WRExact{FgAbGroup::cyclic(pow2(f))}};
  if (s.p == 3) return {WRExact{FgAbGroup::cyclic(4)}};
  return {WRAmbiguous{FgAbGroup::cyclic(pow2(f)), FgAbGroup::cyclic(pow2(f - 1))}};
}

/// Trivial involution: WR(X) = KO(X).
inline FgAbGroup wr_trivial_action(const FgAbGroup& ko_of_x) { return ko_of_x; }

struct FreeActionResult {
  FgAbGroup gr;
  Exponent wr_upper_bound;  // exponent of KO(X/G) / (1 + L)
};

/// Free involution: GR(X) = KO_G(X) = KO(X/G), and WR(X) is a quotient of
/// coker(1 + L) on it, whose exponent bounds that of WR(X).
inline FreeActionResult gr_free_action(const FgAbGroup& ko_quotient, const PresentedHom& one_plus_l) {
  if (!(one_plus_l.source.group() == ko_quotient) || !(one_plus_l.target.group() == ko_quotient))
    throw Error(ErrorKind::PresentationMismatch, "1+L must be an endomorphism of KO(X/G)");
  const KernelCokernel kc = hom_kernel_cokernel(one_plus_l);
  return {ko_quotient, exponent(kc.cokernel)};
}

/// Multiplication by 1 + xi on KO(RP^d) = Z<1> (+) Z/2^f<lambda>, where
/// lambda = xi - 1 and lambda^2 = -2 lambda: 1 -> 2 + lambda, lambda -> 0.
inline PresentedHom one_plus_xi_on_projective_space(std::int64_t d) {
  return endomorphism(ko_projective_space(d), IntMatrix{{2, 0}, {1, 0}});
}

/// The same endomorphism restricted to reduced KO(RP^d) = Z/2^f, where it
/// vanishes.
inline PresentedHom one_plus_xi_on_reduced_projective_space(std::int64_t d) {
  return endomorphism(FgAbGroup::cyclic(pow2(f_of(d))), IntMatrix{{0}});
}

}  // namespace wittkit::spaces
