#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lozenge {

// All counts are exact arbitrary-precision integers and all ratios are kept
// in lowest terms with a positive denominator. There is no machine-word fast
// path: the counts grow superexponentially.
using ExactCount = mpz_class;
using ExactRatio = mpq_class;

std::string count_to_string(const ExactCount& value);

// "numerator/denominator", e.g. "2/1". The denominator is always printed.
std::string ratio_to_string(const ExactRatio& value);

ExactRatio make_ratio(const ExactCount& num, const ExactCount& den);

// Strictly increasing set of positive positions (1-based, counted from the
// left in a row of triangles). May be empty.
class RowSet {
 public:
  RowSet() = default;
  // Requires strictly increasing positions >= 1; duplicates are rejected,
  // not dropped, so caller bugs surface.
  explicit RowSet(std::vector<int> positions);
  static RowSet from_unsorted(std::vector<int> positions);

  int size() const { return static_cast<int>(pos_.size()); }
  bool empty() const { return pos_.empty(); }
  int operator[](int i) const { return pos_[static_cast<size_t>(i)]; }
  int front() const { return pos_.front(); }
  int back() const { return pos_.back(); }
  bool contains(int p) const;
  const std::vector<int>& positions() const { return pos_; }
  std::vector<int>::const_iterator begin() const { return pos_.begin(); }
  std::vector<int>::const_iterator end() const { return pos_.end(); }

  RowSet translated(int offset) const;

  friend bool operator==(const RowSet&, const RowSet&) = default;
  friend auto operator<=>(const RowSet&, const RowSet&) = default;

 private:
  std::vector<int> pos_;
};

RowSet row_union(const RowSet& a, const RowSet& b);
RowSet row_intersection(const RowSet& a, const RowSet& b);
RowSet row_difference(const RowSet& a, const RowSet& b);

// The common part of two row sets plus the private remainders of each side.
struct SetSplit {
  RowSet common;     // A ∩ B
  RowSet a_private;  // A \ common
  RowSet b_private;  // B \ common
};
SetSplit set_algebra(const RowSet& a, const RowSet& b);

// Product of (b - a) over all pairs (a, b) in A x B with a < b.
// The empty product is 1.
ExactCount pair_product(const RowSet& a, const RowSet& b);

// 1! * 2! * ... * (n-1)!; the empty product (n = 1 or 2) is 1. Rejects n < 1.
ExactCount superfactorial(int n);

}  // namespace lozenge
