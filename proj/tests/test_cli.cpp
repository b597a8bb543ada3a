#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lozenge/cli.hpp"
#include "lozenge/jsonio.hpp"

using namespace lozenge;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("count command") {
  CliResult r = run({"count", "--U", "[1,3,6,8]", "--method", "formula"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"U\":[1,3,6,8],\"count\":\"175\",\"method\":\"formula\"}\n");

  r = run({"count", "--U", "[4]"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"U\":[4],\"count\":\"1\",\"method\":\"formula\"}\n");

  r = run({"count", "--U", "[1,3]", "--L", "[2,3]"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"U\":[1,3],\"L\":[2,3],\"count\":\"2\",\"method\":\"formula\"}\n");

  for (const char* method : {"recursion", "oracle"}) {
    r = run({"count", "--U", "[1,3]", "--L", "[2,3]", "--method", method});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"count\":\"2\"") != std::string::npos);
  }

  r = run({"count", "--U", "[1,3,6,8]", "--method", "oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"count\":\"175\"") != std::string::npos);
}

TEST_CASE("count rejects bad input with exit 2") {
  CHECK(run({"count", "--U", "not json"}).code == 2);
  CHECK(run({"count", "--U", "[3,1]"}).code == 2);
  CHECK(run({"count", "--U", "[]"}).code == 2);
  CHECK(run({"count"}).code == 2);
  CHECK(run({"count", "--U", "[2]", "--method", "magic"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("count oracle honors the cell guard with exit 3") {
  CliResult r = run({"count", "--U", "[1,3,6,8]", "--L", "[1,3,6,8]", "--method", "oracle",
                     "--max-cells", "10"});
  CHECK(r.code == 3);
  CHECK(r.err.find("--max-cells") != std::string::npos);
}

TEST_CASE("enumerate streams JSON lines in order") {
  CliResult r = run({"enumerate", "--U", "[2,6]"});
  CHECK(r.code == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "[[2],[2,6]]");
  CHECK(lines[1] == "[[3],[2,6]]");
  CHECK(lines[2] == "[[4],[2,6]]");
  CHECK(lines[3] == "[[5],[2,6]]");

  r = run({"enumerate", "--U", "[5]"});
  CHECK(lines_of(r.out) == std::vector<std::string>{"[[5]]"});

  r = run({"enumerate", "--U", "[1,3,6,8]", "--limit", "3"});
  CHECK(lines_of(r.out).size() == 3);

  r = run({"enumerate", "--U", "[1,3,6,8]"});
  CHECK(lines_of(r.out).size() == 175);
}

TEST_CASE("verify sweep passes") {
  CliResult r = run({"verify", "--sweep", "4"});
  CHECK(r.code == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(!lines.empty());
  Json summary = Json::parse(lines.back());
  CHECK(summary.at("failures").get<long long>() == 0);
  CHECK(summary.at("checks").get<long long>() > 0);
}

TEST_CASE("verify spec file passes and trivial shuffle is accepted") {
  auto path = temp_file("lozenge_verify_spec.json");
  {
    std::ofstream out(path);
    out << R"({"U":[1,2],"L":[1,3],"V":[1],"B":[1,4],"shuffles":[[],[2,3],[2],[3]]})";
  }
  CliResult r = run({"verify", "--spec", path.string()});
  CHECK(r.code == 0);
  Json summary = Json::parse(lines_of(r.out).back());
  CHECK(summary.at("failures").get<long long>() == 0);
  std::filesystem::remove(path);

  CHECK(run({"verify", "--spec", "/nonexistent/spec.json"}).code == 4);
  CHECK(run({"verify"}).code == 2);
}

TEST_CASE("render writes deterministic SVG files") {
  auto patterns = temp_file("lozenge_hex8_patterns.json");
  {
    std::ofstream out(patterns);
    out << R"({"upper":[[4],[2,6],[1,4,7],[1,3,6,8]],)"
        << R"("lower":[[3],[3,6],[2,5,7],[1,3,6,8]],"N":8})";
  }
  auto svg_a = temp_file("lozenge_hex8_a.svg");
  auto svg_b = temp_file("lozenge_hex8_b.svg");
  CHECK(run({"render", "--patterns", patterns.string(), "--out", svg_a.string()}).code == 0);
  CHECK(run({"render", "--patterns", patterns.string(), "--out", svg_b.string()}).code == 0);

  std::ifstream a(svg_a), b(svg_b);
  std::ostringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(sa.str().find("<svg") != std::string::npos);
  // 96 cells in the glued hexagon
  size_t rhombi = 0;
  for (size_t at = sa.str().find("<polygon class=\"lozenge"); at != std::string::npos;
       at = sa.str().find("<polygon class=\"lozenge", at + 1))
    ++rhombi;
  CHECK(rhombi == 48);

  auto region = temp_file("lozenge_region.json");
  {
    std::ofstream out(region);
    out << R"({"m":2,"n":2,"N":3,"U":[1,3],"L":[2,3]})";
  }
  auto svg_c = temp_file("lozenge_region.svg");
  CHECK(run({"render", "--region", region.string(), "--out", svg_c.string()}).code == 0);

  CHECK(run({"render", "--patterns", patterns.string(), "--out",
             "/nonexistent-dir/file.svg"})
            .code == 4);
  CHECK(run({"render", "--region", "/nonexistent/region.json", "--out", svg_c.string()})
            .code == 4);
  CHECK(run({"render", "--out", svg_c.string()}).code == 2);

  std::filesystem::remove(patterns);
  std::filesystem::remove(region);
  std::filesystem::remove(svg_a);
  std::filesystem::remove(svg_b);
  std::filesystem::remove(svg_c);
}

TEST_CASE("identical invocations produce identical stdout") {
  CliResult first = run({"count", "--U", "[1,3,6,8]", "--L", "[2,4,6]"});
  CliResult second = run({"count", "--U", "[1,3,6,8]", "--L", "[2,4,6]"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("all three counting methods agree") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"[1,3,6,8]", ""},  {"[2,5]", ""},        {"[1,3]", "[2,3]"},
      {"[1,4]", "[2,4]"}, {"[1,2,3]", "[1,3]"}, {"[2,4,5]", "[1,5]"},
  };
  for (const auto& [u, l] : cases) {
    std::string reference;
    for (const char* method : {"formula", "recursion", "oracle"}) {
      std::vector<std::string> args = {"count", "--U", u, "--method", method};
      if (!l.empty()) {
        args.push_back("--L");
        args.push_back(l);
      }
      CliResult r = run(args);
      REQUIRE(r.code == 0);
      std::string count = Json::parse(r.out).at("count").get<std::string>();
      if (reference.empty())
        reference = count;
      else
        CHECK(reference == count);
    }
  }
}

TEST_CASE("wire formats") {
  Region region = build_dented_hexagon(2, 2, 4, RowSet({2}), RowSet({3}));
  Json j = to_json(region);
  CHECK(j.dump() == R"({"m":2,"n":2,"N":4,"U":[2],"L":[3]})");
  Region back = region_from_json(j);
  CHECK(back.upper_rows() == 2);
  CHECK(back.diag_len() == 4);
  CHECK(back.dents_up() == RowSet({2}));
  CHECK(to_json(build_half_hexagon(2, 6)).dump() == R"({"m":2,"n":0,"N":6,"U":[],"L":[]})");

  GTPattern pattern = GTPattern::from_rows({{4}, {2, 6}, {1, 4, 7}, {1, 3, 6, 8}});
  CHECK(to_json(pattern).dump() == "[[4],[2,6],[1,4,7],[1,3,6,8]]");
  CHECK(pattern_from_json(Json::parse("[[4],[2,6]]")) == GTPattern::from_rows({{4}, {2, 6}}));

  Tiling unit = pattern_to_tiling(GTPattern::from_rows({{1}}), 1);
  CHECK(to_json(unit).dump() ==
        R"([{"cells":[["upper",1,1,"up"],["lower",1,1,"down"]],"protruding":true}])");
  Tiling crossing = glue_halves(GTPattern::from_rows({{1}}), GTPattern::from_rows({{1}}), 1);
  CHECK(to_json(crossing).dump() ==
        R"([{"cells":[["upper",1,1,"up"],["lower",1,1,"down"]]}])");

  ShuffleSpec moves(RowSet({1, 3}), RowSet({2, 3}), RowSet({1}));
  CHECK(to_json(moves).dump() == R"({"U":[1,3],"L":[2,3],"S":[1]})");
  RestrictedSpec spec(RowSet({1, 2}), RowSet({1, 3}), RowSet({1}), RowSet({1, 4}));
  CHECK(to_json(spec).dump() == R"({"U":[1,2],"L":[1,3],"V":[1],"B":[1,4]})");
  CHECK(restricted_spec_from_json(Json::parse(R"({"U":[1,2],"L":[1,3],"V":[1],"B":[1,4]})"))
            .blocked() == RowSet({2, 3}));
}
