#pragma once

#include <functional>
#include <vector>

#include "lozenge/core.hpp"

namespace lozenge {

enum class PatternCheck { ok, bad_shape, bad_entries, not_interlaced };

// Shape: row i (1-based from the top) has exactly i entries.
// Entries: positive and strictly increasing within each row.
// Interlacing between consecutive rows:
//   row[i][1] <= row[i-1][1] < row[i][2] <= row[i-1][2] < ... < row[i][i].
PatternCheck check_pattern(const std::vector<std::vector<int>>& rows);

// True iff entries and interlacing are valid. Throws std::invalid_argument
// when the triangular shape itself is malformed, so shape errors are
// distinguishable from interlacing failures.
bool validate_pattern(const std::vector<std::vector<int>>& rows);

// Triangular array encoding a half-hexagon tiling: row i holds the positions
// of the i vertical lozenges in the i-th triangle row, counted from the top.
// Instances are valid by construction.
class GTPattern {
 public:
  static GTPattern from_rows(std::vector<std::vector<int>> rows);

  int row_count() const { return static_cast<int>(rows_.size()); }
  const RowSet& row(int i) const { return rows_[static_cast<size_t>(i - 1)]; }  // 1-based
  const RowSet& bottom_row() const { return rows_.back(); }
  const std::vector<RowSet>& rows() const { return rows_; }

  friend bool operator==(const GTPattern&, const GTPattern&) = default;
  friend auto operator<=>(const GTPattern&, const GTPattern&) = default;

 private:
  explicit GTPattern(std::vector<RowSet> rows) : rows_(std::move(rows)) {}
  std::vector<RowSet> rows_;
};

// Number of patterns with the given bottom row U, via the closed product
//   prod_{i<j} (u_j - u_i) / (j - i),
// evaluated exactly as pair_product(U, U) / superfactorial(|U|). The single
// divisibility check doubles as a self-test of the product formula.
ExactCount count_formula(const RowSet& bottom);

// Same count by expanding the row-by-row recursion, memoized on
// difference-normalized rows (the count only depends on entry differences).
ExactCount count_recursive(const RowSet& bottom);

// Visits every pattern with the given bottom row exactly once, in
// lexicographic order of rows read top row first. The visitor returns false
// to stop early. Returns the number of patterns visited.
ExactCount enumerate_patterns(const RowSet& bottom,
                              const std::function<bool(const GTPattern&)>& visit);

std::vector<GTPattern> all_patterns(const RowSet& bottom);

}  // namespace lozenge
