#pragma once

#include "wittkit/error.hpp"
#include "wittkit/integer.hpp"
#include "wittkit/spaces.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wittkit::bounds {

struct Alternative {
  std::string id;
  Integer exponent;
};

/// Best known exponent together with every bound that applied.
struct BoundResult {
  Integer exponent;
  std::string provenance;
  std::vector<Alternative> alternatives;
  std::vector<std::string> notes;
  bool tight = false;
};

namespace detail {

inline BoundResult take_min(std::vector<Alternative> alts) {
  auto best = std::min_element(alts.begin(), alts.end(),
                               [](const Alternative& a, const Alternative& b) { return a.exponent < b.exponent; });
  BoundResult r{best->exponent, best->id, std::move(alts), {}, false};
  return r;
}

// m = ceil((d - 2) / 8)
inline std::int64_t generic_m(std::int64_t d) { return ceil_div(d - 2, 8); }

inline void require_dim(std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
}

}  // namespace detail

/// 2^r for d >= 11 by the residue of d mod 8, with its class label.
struct DimensionClass {
  Integer exponent;
  std::string label;
};

inline DimensionClass high_dimension_table(std::int64_t d) {
  if (d < 11) throw Error(ErrorKind::InvalidArgument, "the high-dimension table starts at d = 11");
  const std::int64_t k = d % 8;
  switch (k) {
    case 0:
    case 1:
    case 2:
      return {4 * ipow(16, static_cast<unsigned>(d / 8)), k == 0 ? "8m" : "8m+" + std::to_string(k)};
    case 7:
      return {4 * ipow(16, static_cast<unsigned>((d + 1) / 8)), "8m-1"};
    case 3:
    case 4:
      return {ipow(16, static_cast<unsigned>(d / 8 + 1)), "8m+" + std::to_string(k)};
    default:  // 5, 6
      return {4 * ipow(16, static_cast<unsigned>(d / 8 + 1)), "8m+" + std::to_string(k)};
  }
}

/// Exponent of kernel and cokernel of W(V) -> WR(V) for a variety of
/// dimension d; the same bound holds for the co-Witt and skew comparisons.
inline BoundResult theta_exponent(std::int64_t d) {
  detail::require_dim(d);
  std::vector<Alternative> alts;
  if (d == 1) alts.push_back({"curves: W = WR", 1});
  if (d == 2) alts.push_back({"dim 2", 2});
  if (d >= 3 && d <= 6) alts.push_back({"dim <= 6", 32});
  if (d >= 7 && d <= 10) alts.push_back({"dim 7-10", 64});
  if (d >= 11) {
    auto cls = high_dimension_table(d);
    alts.push_back({"Thm d≥11 table, class " + cls.label, cls.exponent});
  }
  alts.push_back({"generic 4*16^m", 4 * ipow(16, static_cast<unsigned>(detail::generic_m(d)))});
  BoundResult r = detail::take_min(std::move(alts));
  r.tight = d == 1;
  if (d == 3) r.notes.push_back("torsion of ker(W_0(V) -> Z/2) has exponent 8 for smooth 3-folds");
  return r;
}

/// Exponent of kernel and cokernel of the signature W(V) -> KO(V_R).
inline BoundResult signature_exponent(std::int64_t d) {
  detail::require_dim(d);
  const unsigned f = spaces::f_of(2 * d);
  // The generic signature bound is only used with m >= 1.
  const auto m = std::max<std::int64_t>(1, detail::generic_m(d));
  std::vector<Alternative> alts;
  alts.push_back({"signature generic 2^(3+4m+f)", pow2(static_cast<unsigned>(3 + 4 * m + f))});
  if (d <= 6) alts.push_back({"signature dim <= 6: 64*2^f", 64 * pow2(f)});
  if (d <= 10) alts.push_back({"signature dim <= 10: 128*2^f", 128 * pow2(f)});
  if (d >= 11) {
    const int r = exact_log2(theta_exponent(d).exponent);
    alts.push_back({"signature d≥11: 2^(r+f+1)", pow2(static_cast<unsigned>(r) + f + 1)});
  }
  return detail::take_min(std::move(alts));
}

/// Exponent of W(V) when V has no real points. Never tight.
inline BoundResult witt_exponent_no_real_points(std::int64_t d) {
  detail::require_dim(d);
  const auto m = detail::generic_m(d);
  BoundResult r = detail::take_min(
      {{"no real points: 2^(2+4m+f(2d))", pow2(static_cast<unsigned>(2 + 4 * m + spaces::f_of(2 * d)))}});
  r.notes.push_back("not the best possible bound");
  return r;
}

/// Exponent of WR(X) (and WR'(X)) for a free involution on X of dimension d.
inline Integer wr_free_exponent(std::int64_t dim_x) {
  detail::require_dim(dim_x);
  return pow2(spaces::f_of(dim_x));
}

/// Exponent of kernel and cokernel of WR(X) -> KO(X^G) when G acts freely
/// off X^G, d = dim(X - X^G); one factor of 2 is saved when X^G is a retract.
inline Integer restriction_exponent(std::int64_t dim_free_part, bool retract) {
  detail::require_dim(dim_free_part);
  const unsigned f = spaces::f_of(dim_free_part);
  return pow2(retract ? f : f + 1);
}

/// W_n(V) -> WR_n(V) in the stable range n >= d - 2 has exponent 2.
inline std::optional<Integer> stable_range_exponent(std::int64_t d, std::int64_t n) {
  if (n >= d - 2) return Integer(2);
  return std::nullopt;
}

}  // namespace wittkit::bounds
