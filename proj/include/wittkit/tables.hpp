#pragma once

#include "wittkit/abelian.hpp"
#include "wittkit/clifford.hpp"
#include "wittkit/error.hpp"
#include "wittkit/integer.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace wittkit::tables {

enum class Theory { KO, KU };

/// Homological degree n (KR_n = KR^{-n}), shift i and symmetry sign eps.
struct DegreeIndex {
  std::int64_t n = 0;
  std::int64_t shift = 0;
  int eps = 1;

  bool operator==(const DegreeIndex&) const = default;
};

/// Representative with 0 <= n < 8, 0 <= shift < 4 and eps = +1; a
/// skew-symmetric sign is the same as a shift by 2.
inline DegreeIndex canonicalize_degree(const DegreeIndex& d) {
  if (d.eps != 1 && d.eps != -1) throw Error(ErrorKind::InvalidArgument, "eps must be +1 or -1");
  const std::int64_t shift = d.shift + (d.eps == -1 ? 2 : 0);
  return {mod_floor(d.n, 8), mod_floor(shift, 4), 1};
}

/// KO_n(pt) through the Clifford module pipeline, KU_n(pt) by parity.
inline FgAbGroup point_k_group(Theory theory, std::int64_t n) {
  if (theory == Theory::KU) return n % 2 == 0 ? FgAbGroup::free(1) : FgAbGroup::trivial();
  // KO_n = K^{p,q} with q - p = n (mod 8); take p = 0.
  return clifford::abs_k_group(0, static_cast<unsigned>(mod_floor(n, 8)));
}

/// KO^k(pt) = KO_{-k}.
inline FgAbGroup ko_cohomological(std::int64_t k) { return point_k_group(Theory::KO, -k); }

enum class MapKind { Zero, Iso, Mult, OntoWithKernel };

/// Degreewise description of a homomorphism between point groups.
struct MapDescriptor {
  FgAbGroup source;
  FgAbGroup target;
  MapKind kind = MapKind::Zero;
  Integer factor = 0;             // for Mult
  std::optional<FgAbGroup> kernel;  // for OntoWithKernel

  /// The map as a PresentedHom on canonical presentations.
  PresentedHom as_hom() const {
    Presentation s = Presentation::of(source), t = Presentation::of(target);
    IntMatrix lift(t.generators(), s.generators());
    switch (kind) {
      case MapKind::Zero: break;
      case MapKind::Iso:
      case MapKind::OntoWithKernel:
        // Only the cyclic-to-cyclic and free-to-free shapes occur here.
        if (lift.rows() != 1 || lift.cols() != 1)
          throw Error(ErrorKind::Unsupported, "only rank-one descriptors have a lift");
        lift(0, 0) = 1;
        break;
      case MapKind::Mult:
        lift(0, 0) = factor;
        break;
    }
    return {std::move(s), std::move(t), std::move(lift)};
  }

  FgAbGroup kernel_group() const { return hom_kernel_cokernel(as_hom()).kernel; }
  FgAbGroup cokernel_group() const { return hom_kernel_cokernel(as_hom()).cokernel; }

  std::string kind_string() const {
    switch (kind) {
      case MapKind::Zero: return "ZERO";
      case MapKind::Iso: return "ISO";
      case MapKind::Mult: return "MULT(" + factor.str() + ")";
      case MapKind::OntoWithKernel: return "ONTO_WITH_KERNEL(" + kernel->to_string() + ")";
    }
    return "?";
  }
};

inline MapDescriptor make_map(FgAbGroup source, FgAbGroup target, MapKind kind, Integer factor = 0) {
  if (kind == MapKind::Mult &&
      !(source == FgAbGroup::free(1) && target == FgAbGroup::free(1)))
    throw Error(ErrorKind::InvalidArgument, "MULT(k) requires source and target Z");
  return {std::move(source), std::move(target), kind, std::move(factor), std::nullopt};
}

/// g o f for descriptors with matching middle group.
inline MapDescriptor compose(const MapDescriptor& g, const MapDescriptor& f) {
  if (!(f.target == g.source)) throw Error(ErrorKind::InvalidArgument, "descriptors do not compose");
  if (f.kind == MapKind::Zero || g.kind == MapKind::Zero)
    return make_map(f.source, g.target, MapKind::Zero);
  auto factor_of = [](const MapDescriptor& m) { return m.kind == MapKind::Mult ? m.factor : Integer(1); };
  if (f.source == FgAbGroup::free(1) && g.target == FgAbGroup::free(1))
    return make_map(f.source, g.target, MapKind::Mult, factor_of(f) * factor_of(g));
  if (f.kind == MapKind::Iso && g.kind == MapKind::Iso) return make_map(f.source, g.target, MapKind::Iso);
  throw Error(ErrorKind::Unsupported, "composition outside the rank-one descriptor family");
}

struct RealComplexMaps {
  MapDescriptor complexification;  // c: KO_n -> KU_n
  MapDescriptor realification;     // r: KU_n -> KO_n
};

/// c is 1 at n = 0 and 2 at n = 4 (mod 8), r is 2 at n = 0 and 1 at n = 4,
/// both zero elsewhere; r o c = 2 on the free degrees.
inline RealComplexMaps real_complex_maps(std::int64_t n) {
  const FgAbGroup ko = point_k_group(Theory::KO, n);
  const FgAbGroup ku = point_k_group(Theory::KU, n);
  switch (mod_floor(n, 8)) {
    case 0:
      return {make_map(ko, ku, MapKind::Mult, 1), make_map(ku, ko, MapKind::Mult, 2)};
    case 4:
      return {make_map(ko, ku, MapKind::Mult, 2), make_map(ku, ko, MapKind::Mult, 1)};
    default:
      return {make_map(ko, ku, MapKind::Zero), make_map(ku, ko, MapKind::Zero)};
  }
}

enum class WittBase { RealAlgebraic, ComplexAlgebraic, RealTopological, ComplexTopological };
enum class WittVariant { Witt, CoWitt };

/// 2-primary torsion of GW_n(C) outside its uniquely 2-divisible part.
enum class GwTorsionTag { Zero, Z2, Divisible };

inline std::string to_string(GwTorsionTag t) {
  switch (t) {
    case GwTorsionTag::Zero: return "0";
    case GwTorsionTag::Z2: return "Z/2";
    case GwTorsionTag::Divisible: return "(Q/Z)_(2)";
  }
  return "?";
}

struct TableEntry {
  FgAbGroup group;
  std::optional<std::string> embedding_note;
  std::optional<GwTorsionTag> gw_torsion;
  std::string provenance;
};

inline GwTorsionTag gw_complex_torsion(std::int64_t n) {
  switch (mod_floor(n, 8)) {
    case 1:
    case 2: return GwTorsionTag::Z2;
    case 3:
    case 7: return GwTorsionTag::Divisible;
    default: return GwTorsionTag::Zero;
  }
}

/// Higher Witt and co-Witt groups of R and C for n > 0, algebraic and
/// topological.
inline TableEntry higher_witt_table(WittBase base, WittVariant variant, std::int64_t n) {
  if (n <= 0) throw Error(ErrorKind::DegreeOutOfRange, "degree must be positive, got " + std::to_string(n));
  const std::int64_t r8 = mod_floor(n, 8);
  const bool witt = variant == WittVariant::Witt;
  TableEntry e;
  switch (base) {
    case WittBase::RealAlgebraic:
      e.group = point_k_group(Theory::KO, n);
      if (witt && n % 4 == 0) {
        e.embedding_note = "index 2 in WR_" + std::to_string(n) + "(R) = Z";
        e.provenance = "W_n(R) injects into WR_n(R) with index 2 at n = 0 mod 4";
      } else {
        e.provenance = witt ? "W_n(R) -> WR_n(R) = KO_n isomorphism"
                            : "W'_n(R) -> WR'_n(R) = KO_n isomorphism";
      }
      break;
    case WittBase::ComplexAlgebraic: {
      const bool nonzero = witt ? (r8 == 1 || r8 == 2) : (r8 == 2 || r8 == 3);
      e.group = nonzero ? FgAbGroup::cyclic(2) : FgAbGroup::trivial();
      e.gw_torsion = gw_complex_torsion(n);
      e.provenance = witt ? "Witt groups of C" : "co-Witt groups of C";
      break;
    }
    case WittBase::RealTopological:
      e.group = point_k_group(Theory::KO, n);
      e.provenance = "WR_n(R) = WR'_n(R) = KO_n";
      break;
    case WittBase::ComplexTopological: {
      const RealComplexMaps maps = real_complex_maps(n);
      e.group = witt ? maps.realification.cokernel_group() : maps.complexification.kernel_group();
      e.provenance = witt ? "WR_n(C) = coker(KU_n -> KO_n)" : "WR'_n(C) = ker(KO_n -> KU_n)";
      break;
    }
  }
  return e;
}

/// Composite multiplier of the Bott elements u_k * u_{-k} on Witt groups.
inline Integer bott_product(std::int64_t k) {
  if (k == 2) return 4;
  if (k == 4) return 16;
  if (k > 0 && k % 8 == 0) return 2 * ipow(16, static_cast<unsigned>(k / 8));
  throw Error(ErrorKind::UnsupportedPeriod, "no Bott product for period " + std::to_string(k));
}

}  // namespace wittkit::tables
