#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "lozenge/gtp.hpp"

using namespace lozenge;

namespace {

RowSet rs(std::vector<int> v) { return RowSet(std::move(v)); }

std::vector<RowSet> nonempty_subsets(int limit, int max_size) {
  std::vector<RowSet> out;
  for (unsigned mask = 1; mask < (1u << limit); ++mask) {
    std::vector<int> v;
    for (int p = 1; p <= limit; ++p)
      if (mask & (1u << (p - 1))) v.push_back(p);
    if (static_cast<int>(v.size()) <= max_size) out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace

TEST_CASE("pattern validation") {
  CHECK(validate_pattern({{4}, {2, 6}}));
  CHECK(validate_pattern({{4}, {2, 6}, {1, 4, 7}, {1, 3, 6, 8}}));
  CHECK(validate_pattern({{3}, {3, 6}, {2, 5, 7}, {1, 3, 6, 8}}));
  // 5 >= 4 breaks row[1][1] < row[2][2]
  CHECK_FALSE(validate_pattern({{5}, {2, 4}}));
  // entries must be positive and strictly increasing
  CHECK_FALSE(validate_pattern({{0}}));
  CHECK_FALSE(validate_pattern({{2}, {2, 2}}));
  // malformed shape is reported distinctly
  CHECK_THROWS_AS(validate_pattern({}), std::invalid_argument);
  CHECK_THROWS_AS(validate_pattern({{4}, {2, 6, 7}}), std::invalid_argument);
  CHECK(check_pattern({{4}, {2, 6, 7}}) == PatternCheck::bad_shape);
  CHECK(check_pattern({{5}, {2, 4}}) == PatternCheck::not_interlaced);
  CHECK(check_pattern({{4}, {2, 6}}) == PatternCheck::ok);
}

TEST_CASE("reference patterns round-trip through from_rows") {
  GTPattern four = GTPattern::from_rows({{4}, {2, 6}, {1, 4, 7}, {1, 3, 6, 8}});
  CHECK(four.row_count() == 4);
  CHECK(four.bottom_row() == rs({1, 3, 6, 8}));
  CHECK(four.row(2) == rs({2, 6}));
  CHECK_THROWS_AS(GTPattern::from_rows({{5}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("count formula on fixed rows") {
  CHECK(count_formula(rs({4})) == 1);
  CHECK(count_formula(rs({1, 2, 3, 4, 5})) == 1);
  CHECK(count_formula(rs({1, 3, 6, 8})) == 175);  // 2100 / 12
  CHECK_THROWS_AS(count_formula(rs({})), std::invalid_argument);
}

TEST_CASE("count recursion on fixed rows") {
  CHECK(count_recursive(rs({2, 6})) == 4);
  for (int k = 1; k <= 9; ++k) CHECK(count_recursive(rs({k})) == 1);
  CHECK(count_recursive(rs({1, 3, 6, 8})) == 175);
  CHECK_THROWS_AS(count_recursive(rs({})), std::invalid_argument);
}

TEST_CASE("enumeration of {2,6} in lexicographic order") {
  std::vector<GTPattern> expected = {
      GTPattern::from_rows({{2}, {2, 6}}),
      GTPattern::from_rows({{3}, {2, 6}}),
      GTPattern::from_rows({{4}, {2, 6}}),
      GTPattern::from_rows({{5}, {2, 6}}),
  };
  CHECK(all_patterns(rs({2, 6})) == expected);
}

TEST_CASE("enumeration basics") {
  std::vector<GTPattern> single = all_patterns(rs({4}));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == GTPattern::from_rows({{4}}));

  std::vector<GTPattern> big = all_patterns(rs({1, 3, 6, 8}));
  CHECK(big.size() == 175);
  for (size_t i = 1; i < big.size(); ++i) CHECK(big[i - 1] < big[i]);

  // early stop
  int seen = 0;
  ExactCount visited = enumerate_patterns(rs({1, 3, 6, 8}), [&](const GTPattern&) {
    return ++seen < 3;
  });
  CHECK(seen == 3);
  CHECK(visited == 3);
}

TEST_CASE("formula, recursion and enumeration agree on a small sweep") {
  for (const RowSet& u : nonempty_subsets(6, 4)) {
    ExactCount formula = count_formula(u);
    CHECK(formula == count_recursive(u));
    ExactCount streamed = enumerate_patterns(u, [&](const GTPattern& p) {
      CHECK(p.bottom_row() == u);
      std::vector<std::vector<int>> raw;
      for (const RowSet& row : p.rows()) raw.push_back(row.positions());
      CHECK(validate_pattern(raw));
      return true;
    });
    CHECK(formula == streamed);
    CHECK(formula >= 1);
  }
}

TEST_CASE("translation invariance of the count") {
  for (const RowSet& u : nonempty_subsets(6, 4))
    for (int offset = 0; offset <= 3; ++offset)
      CHECK(count_formula(u) == count_formula(u.translated(offset)));
}
