#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lozenge/render.hpp"

using namespace lozenge;

namespace {

RowSet rs(std::vector<int> v) { return RowSet(std::move(v)); }

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t count = 0;
  for (size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++count;
  return count;
}

bool balanced_svg(const std::string& text) {
  return text.rfind("<?xml", 0) == 0 && count_occurrences(text, "<svg") == 1 &&
         count_occurrences(text, "</svg>") == 1 &&
         count_occurrences(text, "<polygon") == count_occurrences(text, "/>") -
             count_occurrences(text, "<line") &&
         count_occurrences(text, "<g ") == count_occurrences(text, "</g>");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GTPattern hex8_upper() {
  return GTPattern::from_rows({{4}, {2, 6}, {1, 4, 7}, {1, 3, 6, 8}});
}
GTPattern hex8_lower() {
  return GTPattern::from_rows({{3}, {3, 6}, {2, 5, 7}, {1, 3, 6, 8}});
}
GTPattern dent14_upper() {
  return GTPattern::from_rows({{4},
                               {3, 6},
                               {1, 5, 8},
                               {1, 3, 6, 9},
                               {1, 3, 5, 7, 11},
                               {1, 3, 4, 7, 9, 12},
                               {1, 2, 4, 6, 8, 10, 13},
                               {1, 2, 4, 5, 8, 10, 11, 14}});
}
GTPattern dent14_lower() {
  return GTPattern::from_rows({{5},
                               {3, 7},
                               {2, 7, 9},
                               {1, 5, 9, 10},
                               {1, 4, 9, 10, 11},
                               {1, 4, 9, 10, 11, 12},
                               {1, 4, 9, 10, 11, 12, 14}});
}

}  // namespace

TEST_CASE("empty region renders with no triangles") {
  Region empty = build_dented_hexagon(1, 1, 1, rs({1}), rs({1}));
  SvgStyle bare;
  bare.dents_white = false;
  std::string svg = region_to_svg(empty, bare);
  CHECK(balanced_svg(svg));
  CHECK(count_occurrences(svg, "<polygon") == 0);
}

TEST_CASE("region triangles match the cell count") {
  Region half = build_half_hexagon(2, 3);
  std::string svg = region_to_svg(half);
  CHECK(balanced_svg(svg));
  CHECK(count_occurrences(svg, "<polygon class=\"cell\"") ==
        static_cast<size_t>(half.cell_count()));
  CHECK(count_occurrences(svg, "<line class=\"diagonal\"") == 1);

  Region dented = build_dented_hexagon(8, 7, 14, rs({1, 2, 4, 5, 8, 10, 11, 14}),
                                       rs({1, 4, 9, 10, 11, 12, 14}));
  std::string dsvg = region_to_svg(dented);
  CHECK(count_occurrences(dsvg, "<polygon class=\"cell\"") ==
        static_cast<size_t>(dented.cell_count()));
  CHECK(count_occurrences(dsvg, "<polygon class=\"dent\"") == 15);
  CHECK(count_occurrences(dsvg, "fill=\"#ffffff\"") == 15);

  SvgStyle omit;
  omit.dents_white = false;
  CHECK(count_occurrences(region_to_svg(dented, omit), "<polygon class=\"dent\"") == 0);
}

TEST_CASE("single lozenge renders as one rhombus") {
  Tiling unit = pattern_to_tiling(GTPattern::from_rows({{1}}), 1);
  std::string svg = tiling_to_svg(unit);
  CHECK(balanced_svg(svg));
  CHECK(count_occurrences(svg, "<polygon class=\"lozenge") == 1);
}

TEST_CASE("glued tiling renders one rhombus per lozenge") {
  Tiling tiling = glue_halves(hex8_upper(), hex8_lower(), 8);
  Region hexagon = build_dented_hexagon(4, 4, 8, rs({}), rs({}));
  std::string svg = tiling_to_svg(tiling);
  CHECK(balanced_svg(svg));
  CHECK(count_occurrences(svg, "<polygon class=\"lozenge") ==
        static_cast<size_t>(hexagon.cell_count() / 2));
}

TEST_CASE("oracle tilings render with half as many rhombi as cells") {
  Region region = build_dented_hexagon(2, 2, 3, rs({1, 3}), rs({2, 3}));
  brute_force_tilings(region, [&](const Tiling& tiling) {
    std::string svg = tiling_to_svg(tiling);
    CHECK(count_occurrences(svg, "<polygon class=\"lozenge") ==
          static_cast<size_t>(region.cell_count() / 2));
    return true;
  });
}

TEST_CASE("rendering is deterministic and matches the golden files") {
  Tiling hex8 = glue_halves(hex8_upper(), hex8_lower(), 8);
  std::string once = tiling_to_svg(hex8);
  std::string twice = tiling_to_svg(hex8);
  CHECK(once == twice);
  CHECK(once == read_file(std::string(TEST_GOLDEN_DIR) + "/hex8_tiling.svg"));

  Tiling dent14 = glue_halves(dent14_upper(), dent14_lower(), 14);
  CHECK(tiling_to_svg(dent14) == read_file(std::string(TEST_GOLDEN_DIR) + "/dent14_tiling.svg"));
}

TEST_CASE("style options change the output") {
  Tiling unit = pattern_to_tiling(GTPattern::from_rows({{1}}), 1);
  SvgStyle style;
  style.scale = 20.0;
  style.show_diagonal = false;
  style.vertical = "#123456";
  std::string svg = tiling_to_svg(unit, style);
  CHECK(count_occurrences(svg, "<line class=\"diagonal\"") == 0);
  CHECK(count_occurrences(svg, "fill=\"#123456\"") == 1);
}
