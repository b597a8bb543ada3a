#include "lozenge/core.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace lozenge {

std::string count_to_string(const ExactCount& value) { return value.get_str(); }

std::string ratio_to_string(const ExactRatio& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

ExactRatio make_ratio(const ExactCount& num, const ExactCount& den) {
  if (den == 0) throw std::invalid_argument("ratio denominator must be nonzero");
  ExactRatio q(num, den);
  q.canonicalize();
  return q;
}

RowSet::RowSet(std::vector<int> positions) : pos_(std::move(positions)) {
  for (size_t i = 0; i < pos_.size(); ++i) {
    if (pos_[i] < 1) throw std::invalid_argument("row set positions must be >= 1");
    if (i > 0 && pos_[i] == pos_[i - 1])
      throw std::invalid_argument("row set positions must not repeat");
    if (i > 0 && pos_[i] < pos_[i - 1])
      throw std::invalid_argument("row set positions must be strictly increasing");
  }
}

RowSet RowSet::from_unsorted(std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  return RowSet(std::move(positions));
}

bool RowSet::contains(int p) const {
  return std::binary_search(pos_.begin(), pos_.end(), p);
}

RowSet RowSet::translated(int offset) const {
  std::vector<int> out;
  out.reserve(pos_.size());
  for (int p : pos_) out.push_back(p + offset);
  return RowSet(std::move(out));
}

RowSet row_union(const RowSet& a, const RowSet& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return RowSet(std::move(out));
}

RowSet row_intersection(const RowSet& a, const RowSet& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return RowSet(std::move(out));
}

RowSet row_difference(const RowSet& a, const RowSet& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return RowSet(std::move(out));
}

SetSplit set_algebra(const RowSet& a, const RowSet& b) {
  SetSplit split;
  split.common = row_intersection(a, b);
  split.a_private = row_difference(a, split.common);
  split.b_private = row_difference(b, split.common);
  return split;
}

ExactCount pair_product(const RowSet& a, const RowSet& b) {
  ExactCount prod(1);
  for (int x : a)
    for (int y : b)
      if (x < y) prod *= y - x;
  return prod;
}

ExactCount superfactorial(int n) {
  if (n < 1) throw std::invalid_argument("superfactorial requires n >= 1");
  ExactCount result(1);
  ExactCount factorial(1);
  for (int k = 1; k < n; ++k) {
    factorial *= k;
    result *= factorial;
  }
  return result;
}

}  // namespace lozenge
