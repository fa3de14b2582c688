#pragma once

#include "wittkit/abelian.hpp"
#include "wittkit/bounds.hpp"
#include "wittkit/clifford.hpp"
#include "wittkit/error.hpp"
#include "wittkit/json.hpp"
#include "wittkit/smith.hpp"
#include "wittkit/spaces.hpp"
#include "wittkit/tables.hpp"
#include "wittkit/witt.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace wittkit::cli {

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

// Malformed JSON payloads are usage errors, not domain errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Json parse_payload(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("cannot parse ") + what + " as JSON: " + e.what());
  }
}

template <class F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) throw UsageError(e.what());
    throw;
  }
}

struct Output {
  bool json = false;
  std::ostringstream text;
  Json doc = Json::object();

  /// Group fields at the top level, then the rest.
  void group(const FgAbGroup& g) {
    Json gj = group_to_json(g);
    doc["rank"] = gj["rank"];
    doc["torsion"] = gj["torsion"];
  }

  std::string render() const { return json ? doc.dump() + "\n" : text.str(); }
};

class App {
 public:
  App() : app_("Witt and K-theory invariants of real varieties and Real spaces", "wittkit") {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_flag("--json", out_.json, "Emit JSON instead of text");
    app_.add_option("--file", file_, "Read the JSON payload (matrix, group, table or cup product) from PATH");
    add_snf();
    add_group();
    add_clifford();
    add_table();
    add_witt_table();
    add_sphere();
    add_rp();
    add_lowdim();
    add_curve();
    add_bounds();
  }

  RunResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"wittkit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    RunResult r;
    try {
      app_.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      r.out = app_.help();
      return r;
    } catch (const CLI::ParseError& e) {
      r.exit_code = 2;
      r.err = std::string("error: ") + e.what() + "\n" + usage();
      return r;
    }
    try {
      action_();
    } catch (const UsageError& e) {
      r.exit_code = 2;
      r.err = std::string("error: ") + e.what() + "\n" + usage();
      return r;
    } catch (const Error& e) {
      r.exit_code = 1;
      r.err = std::string("error: ") + e.what() + "\n";
      return r;
    }
    r.out = out_.render();
    return r;
  }

 private:
  std::string usage() const {
    const CLI::App* sub = nullptr;
    for (const auto* s : app_.get_subcommands()) sub = s;
    return sub ? sub->help() : app_.help();
  }

  std::string payload(const std::string& inline_value, const char* what) const {
    if (!file_.empty()) {
      std::ifstream in(file_);
      if (!in) throw UsageError("cannot read --file " + file_);
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
    if (inline_value.empty()) throw UsageError(std::string("missing ") + what + " (inline or via --file)");
    return inline_value;
  }

  void add_snf() {
    auto* sub = app_.add_subcommand("snf", "Smith normal form U*A*V = D of an integer matrix");
    sub->add_option("--matrix", s_[0], "Matrix as a JSON list of rows");
    sub->callback([this] {
      action_ = [this] {
        const IntMatrix a = as_usage([&] { return matrix_from_json(parse_payload(payload(s_[0], "--matrix"), "matrix")); });
        const SmithForm s = smith_normal_form(a);
        const FgAbGroup coker = cokernel(a);
        Json factors = Json::array();
        for (const auto& d : s.invariant_factors()) factors.push_back(integer_to_json(d));
        out_.doc = {{"D", matrix_to_json(s.D)},        {"U", matrix_to_json(s.U)},
                    {"V", matrix_to_json(s.V)},        {"invariant_factors", factors},
                    {"cokernel", group_to_json(coker)}, {"provenance", "Smith normal form"}};
        out_.text << "D = " << s.D << "\nU = " << s.U << "\nV = " << s.V << "\ninvariant factors:";
        for (const auto& d : s.invariant_factors()) out_.text << ' ' << d;
        out_.text << "\ncokernel = " << coker.to_string() << "\n";
      };
    });
  }

  void add_group() {
    auto* sub = app_.add_subcommand("group", "Finitely generated abelian group operations");
    sub->require_subcommand(1);

    auto* sum = sub->add_subcommand("sum", "Direct sum of two groups");
    sum->add_option("--a", s_[0], "First group as JSON {\"rank\":r,\"torsion\":[...]}");
    sum->add_option("--b", s_[1], "Second group as JSON");
    sum->callback([this] {
      action_ = [this] {
        FgAbGroup g, h;
        if (!file_.empty()) {
          Json pair = parse_payload(payload("", "groups"), "groups");
          if (!pair.is_array() || pair.size() != 2) throw UsageError("--file must hold a JSON array of two groups");
          g = as_usage([&] { return group_from_json(pair[0]); });
          h = as_usage([&] { return group_from_json(pair[1]); });
        } else {
          g = as_usage([&] { return group_from_json(parse_payload(payload(s_[0], "--a"), "--a")); });
          h = as_usage([&] { return group_from_json(parse_payload(payload(s_[1], "--b"), "--b")); });
        }
        const FgAbGroup r = direct_sum(g, h);
        out_.group(r);
        out_.doc["provenance"] = "direct sum in invariant-factor form";
        out_.text << r.to_string() << "\n";
      };
    });

    auto* exp = sub->add_subcommand("exponent", "Exponent of a group");
    exp->add_option("--group", s_[0], "Group as JSON");
    exp->callback([this] {
      action_ = [this] {
        const FgAbGroup g = as_usage([&] { return group_from_json(parse_payload(payload(s_[0], "--group"), "--group")); });
        const Exponent e = exponent(g);
        out_.doc = {{"exponent", exponent_to_json(e)}, {"provenance", "least e with e*g = 0 for all g"}};
        out_.text << e.to_string() << "\n";
      };
    });

    auto* rec = sub->add_subcommand("recognize", "Invariant factors of a finite abelian group from its Cayley table");
    rec->add_option("--table", s_[0], "Cayley table as a JSON n x n array of indices");
    rec->add_option("--identity", identity_, "Index of the identity element")->default_val(0);
    rec->callback([this] {
      action_ = [this] {
        const Json t = parse_payload(payload(s_[0], "--table"), "table");
        std::vector<std::vector<std::size_t>> table;
        try {
          table = t.get<std::vector<std::vector<std::size_t>>>();
        } catch (const Json::exception& e) {
          throw UsageError(std::string("table must be an array of index rows: ") + e.what());
        }
        const FgAbGroup g = recognize_finite_abelian(table, identity_);
        out_.group(g);
        out_.doc["provenance"] = "relation lattice of a generating set, reduced by Smith normal form";
        out_.text << g.to_string() << "\n";
      };
    });
  }

  void add_clifford() {
    auto* sub = app_.add_subcommand("clifford", "Wedderburn class of C^{p,q} and its Clifford-module K-group");
    sub->add_option("--p", p_, "Generators squaring to -1")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--q", q_, "Generators squaring to +1")->required()->check(CLI::NonNegativeNumber);
    sub->callback([this] {
      action_ = [this] {
        const auto p = static_cast<unsigned>(p_), q = static_cast<unsigned>(q_);
        const clifford::CliffordClass c = clifford::classify_clifford(p, q);
        const FgAbGroup k = clifford::abs_k_group(p, q);
        const auto n = mod_floor(static_cast<std::int64_t>(q) - static_cast<std::int64_t>(p), 8);
        out_.doc = {{"p", p},
                    {"q", q},
                    {"class", c.to_string()},
                    {"matrix_size", integer_to_json(c.matrix_size)},
                    {"base", std::string(1, clifford::base_letter(c.base))},
                    {"split", c.split},
                    {"real_dimension", integer_to_json(c.real_dimension())},
                    {"k_group", group_to_json(k)},
                    {"ko_degree", n},
                    {"provenance", "Clifford periodicity and the restriction-functor Grothendieck group"}};
        out_.text << "C^{" << p << "," << q << "} = " << c.to_string() << "\n"
                  << "K^{" << p << "," << q << "} = " << k.to_string() << " = KO_" << n << "\n";
      };
    });
  }

  void add_table() {
    auto* sub = app_.add_subcommand("table", "Point groups KO_n and KU_n");
    sub->add_option("--theory", theory_, "ko or ku")->required()->check(CLI::IsMember({"ko", "ku"}));
    sub->add_option("--degree", degree_, "Homological degree n")->required();
    sub->callback([this] {
      action_ = [this] {
        const auto th = theory_ == "ko" ? tables::Theory::KO : tables::Theory::KU;
        const FgAbGroup g = tables::point_k_group(th, degree_);
        out_.group(g);
        out_.doc["theory"] = theory_;
        out_.doc["degree"] = degree_;
        out_.doc["provenance"] = theory_ == "ko" ? "KO_n(pt) from Clifford modules" : "KU_n(pt) by Bott periodicity";
        out_.text << (theory_ == "ko" ? "KO_" : "KU_") << degree_ << " = " << g.to_string() << "\n";
      };
    });
  }

  void add_witt_table() {
    auto* sub = app_.add_subcommand("witt-table", "Higher Witt and co-Witt groups of R and C");
    sub->add_option("--base", base_, "ralg, calg, rtop or ctop")->required()->check(CLI::IsMember({"ralg", "calg", "rtop", "ctop"}));
    sub->add_option("--variant", variant_, "w or cow")->required()->check(CLI::IsMember({"w", "cow"}));
    sub->add_option("--degree", degree_, "Degree n > 0")->required();
    sub->callback([this] {
      action_ = [this] {
        using tables::WittBase;
        const WittBase b = base_ == "ralg"   ? WittBase::RealAlgebraic
                           : base_ == "calg" ? WittBase::ComplexAlgebraic
                           : base_ == "rtop" ? WittBase::RealTopological
                                             : WittBase::ComplexTopological;
        const auto v = variant_ == "w" ? tables::WittVariant::Witt : tables::WittVariant::CoWitt;
        const tables::TableEntry e = tables::higher_witt_table(b, v, degree_);
        out_.group(e.group);
        out_.doc["base"] = base_;
        out_.doc["variant"] = variant_;
        out_.doc["degree"] = degree_;
        out_.doc["note"] = e.embedding_note ? Json(*e.embedding_note) : Json(nullptr);
        out_.doc["gw_torsion"] = e.gw_torsion ? Json(tables::to_string(*e.gw_torsion)) : Json(nullptr);
        out_.doc["provenance"] = e.provenance;
        const bool top = b == WittBase::RealTopological || b == WittBase::ComplexTopological;
        const bool real = b == WittBase::RealAlgebraic || b == WittBase::RealTopological;
        out_.text << (top ? "WR" : "W") << (v == tables::WittVariant::CoWitt ? "'" : "") << "_" << degree_
                  << (real ? "(R)" : "(C)") << " = " << e.group.to_string();
        if (e.embedding_note) out_.text << " [" << *e.embedding_note << "]";
        out_.text << "\n";
        if (e.gw_torsion) out_.text << "2-primary torsion of GW_" << degree_ << "(C): " << tables::to_string(*e.gw_torsion) << "\n";
      };
    });
  }

  void add_sphere() {
    auto* sub = app_.add_subcommand("sphere", "KR^n and WR of the antipodal sphere S^{p,0}");
    sub->add_option("--p", sphere_p_, "Sphere S^{p-1} with antipodal involution")->required();
    sub->add_option("--degree", degree_, "Cohomological degree n of KR^n")->default_val(0);
    sub->add_flag("--wr", flag_a_, "Report WR(S^{p,0}) instead of KR^n");
    sub->callback([this] {
      action_ = [this] {
        const spaces::SphereDescriptor s{sphere_p_};
        if (!flag_a_) {
          const FgAbGroup g = spaces::kr_antipodal_sphere(s, degree_);
          out_.group(g);
          out_.doc["p"] = sphere_p_;
          out_.doc["degree"] = degree_;
          out_.doc["provenance"] = "KR^n(S^{p,0}) = KO^n(pt) (+) KO^{n+p+1}(pt)";
          out_.text << "KR^" << degree_ << "(S^{" << sphere_p_ << ",0}) = " << g.to_string() << "\n";
          return;
        }
        const spaces::WRResult w = spaces::wr_antipodal_sphere(s);
        out_.doc["p"] = sphere_p_;
        out_.text << "WR(S^{" << sphere_p_ << ",0}) = ";
        if (w.is_exact()) {
          out_.doc["kind"] = "EXACT";
          out_.doc["group"] = group_to_json(w.exact());
          out_.text << w.exact().to_string() << "\n";
        } else {
          out_.doc["kind"] = "AMBIGUOUS";
          out_.doc["candidates"] = Json::array({group_to_json(w.ambiguous().larger), group_to_json(w.ambiguous().smaller)});
          out_.text << w.ambiguous().larger.to_string() << " or " << w.ambiguous().smaller.to_string()
                    << " (undetermined)\n";
        }
        out_.doc["provenance"] = "WR(S^{p,0}) from reduced KO(RP^{p-1})";
      };
    });
  }

  void add_rp() {
    auto* sub = app_.add_subcommand("rp", "KO of real projective space");
    sub->add_option("--dim", dim_, "Dimension d >= 1")->required();
    sub->callback([this] {
      action_ = [this] {
        const FgAbGroup g = spaces::ko_projective_space(dim_);
        out_.group(g);
        out_.doc["provenance"] = "KO(RP^d) = Z (+) Z/2^f(d) (Adams)";
        out_.text << "KO(RP^" << dim_ << ") = " << g.to_string() << "\n";
      };
    });
  }

  void add_lowdim() {
    auto* sub = app_.add_subcommand("lowdim", "Reduced KO of a connected complex of dimension <= 3");
    sub->add_option("--b1", b1_, "dim H^1(M; Z/2)")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--b2", b2_, "dim H^2(M; Z/2)")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--cup", s_[0], "Cup product as a JSON b1 x b1 array of 0/1 vectors of length b2");
    sub->callback([this] {
      action_ = [this] {
        spaces::LowDimCohomology c{static_cast<unsigned>(b1_), static_cast<unsigned>(b2_), {}};
        const std::string text = file_.empty() && s_[0].empty() ? std::string() : payload(s_[0], "--cup");
        if (text.empty()) {
          c = spaces::LowDimCohomology::untwisted(c.b1, c.b2);
        } else {
          const Json j = parse_payload(text, "cup");
          try {
            c.cup = j.get<std::vector<std::vector<std::vector<int>>>>();
          } catch (const Json::exception& e) {
            throw UsageError(std::string("cup must be a nested array of 0/1: ") + e.what());
          }
          as_usage([&] { c.validate(); return 0; });
        }
        const FgAbGroup g = spaces::ko_low_dim_reduced(c);
        out_.group(g);
        out_.doc["provenance"] = "collapsed Atiyah-Hirzebruch spectral sequence with the Stiefel-Whitney group law";
        out_.text << "reduced KO(M) = " << g.to_string() << "\n";
      };
    });
  }

  void add_curve() {
    auto* sub = app_.add_subcommand("curve", "Witt, KR and co-Witt groups of real curves");
    sub->add_option("--genus", genus_, "Genus g")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--nu", nu_, "Number of real circles (closed components for affine curves)")->default_val(0)->check(CLI::NonNegativeNumber);
    sub->add_option("--over", over_, "Field of definition: R or C")->default_val("R")->check(CLI::IsMember({"R", "C"}));
    sub->add_flag("--kr", flag_a_, "Report the KR groups");
    sub->add_flag("--cowitt", flag_b_, "Report the co-Witt comparison");
    sub->add_flag("--singular", flag_c_, "The curve is singular");
    sub->add_option("--punctures", punctures_, "Number of points removed")->default_val(0)->check(CLI::NonNegativeNumber);
    sub->callback([this] {
      action_ = [this] {
        if (flag_a_ && flag_b_) throw UsageError("--kr and --cowitt are exclusive");
        witt::CurveDescriptor c{static_cast<unsigned>(genus_), static_cast<unsigned>(nu_),
                                over_ == "C" ? witt::DefinedOver::Complex : witt::DefinedOver::RealGeometricallyConnected,
                                !flag_c_, static_cast<unsigned>(punctures_)};
        as_usage([&] { c.validate(); return 0; });
        if (flag_a_) return curve_kr(c);
        if (flag_b_) return curve_cowitt(c);
        curve_witt(c);
      };
    });
  }

  void curve_witt(const witt::CurveDescriptor& c) {
    const witt::WittCurveResult r = witt::witt_curve(c);
    out_.doc["witt"] = group_to_json(r.witt);
    out_.doc["skew"] = group_to_json(r.skew);
    if (r.signature_image) {
      out_.doc["signature_image"] = {{"nu", r.signature_image->nu},
                                     {"index", integer_to_json(r.signature_image->index())},
                                     {"basis", matrix_to_json(r.signature_image->basis)}};
      out_.doc["split_sequence"] = r.split_sequence_note;
    } else {
      out_.doc["signature_image"] = nullptr;
    }
    out_.doc["certificate"] = r.certificate;
    out_.doc["provenance"] = r.provenance;
    out_.text << "W(V) = WR(V) = " << r.witt.to_string() << "\n"
              << "-1W(V) = -1WR(V) = " << r.skew.to_string() << "\n";
    if (r.signature_image) out_.text << "signature image: " << r.split_sequence_note << "\n";
  }

  void curve_kr(const witt::CurveDescriptor& c) {
    if (c.punctures > 0) {
      const FgAbGroup g = witt::kr_affine_curve_k0(c.genus, c.nu, c.punctures);
      out_.group(g);
      out_.doc["provenance"] = "affine curve: KR_0(V) = Z (+) (Z/2)^lambda";
      out_.text << "KR_0(V) = " << g.to_string() << "\n";
      return;
    }
    const auto table = witt::kr_curve_table(c.genus, c.nu);
    Json kr = Json::array();
    for (std::size_t i = 0; i < table.size(); ++i) {
      kr.push_back(group_to_json(table[i]));
      out_.text << "KR^" << i << "(V) = " << table[i].to_string() << "\n";
    }
    out_.doc["kr"] = std::move(kr);
    out_.doc["k0_annotation"] = witt::kr_curve_k0_annotation(c.genus);
    out_.doc["provenance"] = "KR groups of a smooth projective curve with real points";
    out_.text << witt::kr_curve_k0_annotation(c.genus) << "\n";
  }

  void curve_cowitt(const witt::CurveDescriptor& c) {
    const witt::CoWittResult r = witt::cowitt_curve(c);
    out_.doc = {{"rank_min", r.rank_min},
                {"rank_max", r.rank_max},
                {"theta_iso", r.theta_iso()},
                {"sequence", r.sequence_note},
                {"provenance", r.provenance}};
    out_.text << r.sequence_note << "\n";
    if (r.rank_exact())
      out_.text << "rank(E) = " << r.rank_min << "\n";
    else
      out_.text << "rank(E) in [" << r.rank_min << ", " << r.rank_max << "]\n";
  }

  void add_bounds() {
    auto* sub = app_.add_subcommand("bounds", "Exponent bounds for Witt comparison maps");
    sub->add_option("--dim", dim_, "Dimension d of the variety");
    sub->add_flag("--signature", flag_a_, "Bound for the signature W(V) -> KO(V_R)");
    sub->add_flag("--no-real-points", flag_b_, "Exponent of W(V) when V has no real points");
    sub->add_option("--free", free_dim_, "Exponent of WR(X) for a free involution on X of this dimension");
    sub->add_option("--restriction", restriction_dim_, "Exponent for WR(X) -> KO(X^G), d = dim(X - X^G)");
    sub->add_flag("--retract", flag_c_, "X^G is a retract of X");
    sub->add_option("--degree", bound_degree_, "Stable-range check for theta_n at this degree");
    sub->callback([this] {
      action_ = [this] {
        const int selectors = flag_a_ + flag_b_ + free_dim_.has_value() + restriction_dim_.has_value() +
                              bound_degree_.has_value();
        if (selectors > 1) throw UsageError("choose at most one of --signature, --no-real-points, --free, --restriction, --degree");
        if (flag_c_ && !restriction_dim_) throw UsageError("--retract only applies with --restriction");
        if (free_dim_) return simple_bound("wr_free", bounds::wr_free_exponent(*free_dim_), "free involution: exponent 2^f(d)");
        if (restriction_dim_)
          return simple_bound("restriction", bounds::restriction_exponent(*restriction_dim_, flag_c_),
                              flag_c_ ? "restriction with retract: 2^f(d)" : "restriction: 2^(1+f(d))");
        if (dim_ == 0) throw UsageError("--dim is required");
        if (bound_degree_) {
          const auto e = bounds::stable_range_exponent(dim_, *bound_degree_);
          out_.doc = {{"quantity", "stable_range"},
                      {"exponent", e ? integer_to_json(*e) : Json("NOT_APPLICABLE")},
                      {"provenance", "stable range n >= d - 2"}};
          out_.text << "theta_" << *bound_degree_ << " exponent "
                    << (e ? "≤ " + e->str() + " (stable range n ≥ d-2)" : std::string("NOT_APPLICABLE")) << "\n";
          return;
        }
        if (flag_a_) return full_bound("signature", bounds::signature_exponent(dim_));
        if (flag_b_) return full_bound("witt_no_real_points", bounds::witt_exponent_no_real_points(dim_));
        full_bound("theta", bounds::theta_exponent(dim_));
      };
    });
  }

  void simple_bound(const char* quantity, const Integer& e, const char* provenance) {
    out_.doc = {{"quantity", quantity}, {"exponent", integer_to_json(e)}, {"provenance", provenance}};
    out_.text << quantity << " exponent ≤ " << e << " (" << provenance << ")\n";
  }

  void full_bound(const char* quantity, const bounds::BoundResult& b) {
    Json alts = Json::array();
    for (const auto& a : b.alternatives) alts.push_back({{"id", a.id}, {"exponent", integer_to_json(a.exponent)}});
    out_.doc = {{"quantity", quantity},     {"exponent", integer_to_json(b.exponent)},
                {"provenance", b.provenance}, {"alternatives", std::move(alts)},
                {"notes", b.notes},           {"tight", b.tight}};
    const std::string label = std::string(quantity) == "witt_no_real_points" ? "W(V)" : quantity;
    out_.text << label << " exponent ≤ " << b.exponent << " (" << b.provenance << ")\n";
    for (const auto& n : b.notes) out_.text << "note: " << n << "\n";
  }

  CLI::App app_;
  Output out_;
  std::function<void()> action_;
  std::string file_;
  std::string s_[2];
  std::size_t identity_ = 0;
  long long p_ = 0, q_ = 0;
  std::string theory_, base_, variant_, over_ = "R";
  std::int64_t degree_ = 0;
  std::int64_t dim_ = 0;
  std::int64_t sphere_p_ = 0;
  long long b1_ = 0, b2_ = 0, genus_ = 0, nu_ = 0, punctures_ = 0;
  bool flag_a_ = false, flag_b_ = false, flag_c_ = false;
  std::optional<std::int64_t> free_dim_, restriction_dim_, bound_degree_;
};

}  // namespace detail

/// Runs one command line (without the program name).
inline RunResult run(const std::vector<std::string>& args) {
  detail::App app;
  return app.run(args);
}

}  // namespace wittkit::cli
