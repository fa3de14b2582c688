#include "wittkit/cli.hpp"
#include "wittkit/json.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace wittkit;
using cli::run;

namespace {

struct Golden {
  std::string name;
  Json doc;
};

std::vector<Golden> load_goldens() {
  std::vector<Golden> out;
  for (const auto& entry : std::filesystem::directory_iterator(WITTKIT_GOLDEN_DIR)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    out.push_back({entry.path().stem().string(), Json::parse(in)});
  }
  std::sort(out.begin(), out.end(), [](const Golden& a, const Golden& b) { return a.name < b.name; });
  return out;
}

/// Every {"rank", "torsion"} object in the document parses back to a group
/// that serializes identically.
void expect_groups_round_trip(const Json& j, const std::string& where) {
  if (j.is_object()) {
    if (j.contains("rank") && j.contains("torsion")) {
      const FgAbGroup g = group_from_json(j);
      const Json back = group_to_json(g);
      EXPECT_EQ(back["rank"], j["rank"]) << where;
      EXPECT_EQ(back["torsion"], j["torsion"]) << where;
    }
    for (const auto& [k, v] : j.items()) expect_groups_round_trip(v, where + "." + k);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) expect_groups_round_trip(j[i], where + "[" + std::to_string(i) + "]");
  }
}

}  // namespace

TEST(CliGolden, EveryCaseMatches) {
  const auto goldens = load_goldens();
  ASSERT_GE(goldens.size(), 30u);
  for (const auto& g : goldens) {
    SCOPED_TRACE(g.name);
    const auto args = g.doc["args"].get<std::vector<std::string>>();
    const auto r = run(args);
    EXPECT_EQ(r.exit_code, g.doc["exit_code"].get<int>()) << r.err;
    if (g.doc["output"].is_null()) {
      EXPECT_TRUE(r.out.empty());
      EXPECT_NE(r.err.find(g.doc["stderr_contains"].get<std::string>()), std::string::npos) << r.err;
      continue;
    }
    const Json got = Json::parse(r.out);
    EXPECT_EQ(got, g.doc["output"]) << r.out;
    ASSERT_TRUE(got.contains("provenance"));
    EXPECT_FALSE(got["provenance"].get<std::string>().empty());
    EXPECT_EQ(Json::parse(got.dump()), got);
    expect_groups_round_trip(got, g.name);
  }
}

TEST(Cli, SpecExamples) {
  auto r = run({"curve", "--genus", "2", "--nu", "3"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("W(V) = WR(V) = Z^3 (+) Z/2 (+) Z/2\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("Gamma"), std::string::npos);

  r = run({"rp", "--dim", "6", "--json"});
  EXPECT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["rank"], 1);
  EXPECT_EQ(j["torsion"], Json::array({8}));

  r = run({"bounds", "--dim", "11"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "theta exponent ≤ 256 (Thm d≥11 table, class 8m+3)\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(run({"clifford", "--p", "1"}).exit_code, 2);
  EXPECT_EQ(run({"table", "--theory", "kx", "--degree", "1"}).exit_code, 2);
  EXPECT_EQ(run({"bounds", "--dim", "3", "--signature", "--no-real-points"}).exit_code, 2);

  auto r = run({"sphere", "--p", "2"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("SmallP"), std::string::npos);
  r = run({"curve", "--genus", "0", "--nu", "0", "--kr"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("NoRealPoints"), std::string::npos);

  r = run({"rp", "--dim", "x"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, JsonFlagPositionDoesNotMatter) {
  EXPECT_EQ(run({"--json", "rp", "--dim", "5"}).out, run({"rp", "--dim", "5", "--json"}).out);
}

TEST(Cli, FileInput) {
  const auto path = std::filesystem::temp_directory_path() / "wittkit_cli_matrix.json";
  std::ofstream(path) << "[[2, 0], [0, 3]]";
  const auto r = run({"--file", path.string(), "--json", "snf"});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["invariant_factors"], Json::array({1, 6}));

  std::ofstream(path) << R"([[[1, 0]]])";
  const auto l = run({"--file", path.string(), "lowdim", "--b1", "1", "--b2", "2"});
  EXPECT_EQ(l.out, "reduced KO(M) = Z/2 (+) Z/4\n");

  std::ofstream(path) << R"([{"rank": 1, "torsion": [4]}, {"rank": 0, "torsion": [6]}])";
  const auto s = run({"--file", path.string(), "group", "sum"});
  EXPECT_EQ(s.out, "Z^1 (+) Z/2 (+) Z/12\n");
  std::filesystem::remove(path);

  EXPECT_EQ(run({"--file", "/nonexistent/wittkit.json", "snf"}).exit_code, 2);
}

TEST(Cli, TextAndJsonReportTheSameGroups) {
  const std::vector<std::vector<std::string>> cases = {
      {"rp", "--dim", "9"},
      {"table", "--theory", "ko", "--degree", "2"},
      {"witt-table", "--base", "calg", "--variant", "w", "--degree", "2"},
      {"sphere", "--p", "7", "--degree", "3"},
      {"lowdim", "--b1", "1", "--b2", "2", "--cup", "[[[0,1]]]"},
      {"curve", "--genus", "1", "--nu", "2", "--kr", "--punctures", "1"},
      {"group", "sum", "--a", R"({"rank":1,"torsion":[2]})", "--b", R"({"rank":0,"torsion":[4]})"},
  };
  for (auto args : cases) {
    const auto text = run(args);
    args.push_back("--json");
    const auto json = run(args);
    ASSERT_EQ(text.exit_code, 0) << text.err;
    const FgAbGroup g = group_from_json(Json::parse(json.out));
    const bool after_equals = text.out.find("= " + g.to_string() + "\n") != std::string::npos;
    const bool whole_line = text.out.rfind(g.to_string() + "\n", 0) == 0;
    EXPECT_TRUE(after_equals || whole_line) << text.out;
  }

  const auto curve_text = run({"curve", "--genus", "3", "--nu", "2"});
  const auto curve_json = Json::parse(run({"curve", "--genus", "3", "--nu", "2", "--json"}).out);
  EXPECT_NE(curve_text.out.find(group_from_json(curve_json["witt"]).to_string()), std::string::npos);

  const auto kr_text = run({"curve", "--genus", "2", "--nu", "3", "--kr"});
  const auto kr_json = Json::parse(run({"curve", "--genus", "2", "--nu", "3", "--kr", "--json"}).out);
  for (std::size_t i = 0; i < 8; ++i)
    EXPECT_NE(kr_text.out.find("KR^" + std::to_string(i) + "(V) = " + group_from_json(kr_json["kr"][i]).to_string() + "\n"),
              std::string::npos);
}
