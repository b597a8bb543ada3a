#include "lozenge/gtp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lozenge {

PatternCheck check_pattern(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return PatternCheck::bad_shape;
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != i + 1) return PatternCheck::bad_shape;
  for (const auto& row : rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1) return PatternCheck::bad_entries;
      if (j > 0 && row[j] <= row[j - 1]) return PatternCheck::bad_entries;
    }
  }
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto& above = rows[i - 1];
    const auto& below = rows[i];
    for (size_t j = 0; j < above.size(); ++j)
      if (!(below[j] <= above[j] && above[j] < below[j + 1]))
        return PatternCheck::not_interlaced;
  }
  return PatternCheck::ok;
}

bool validate_pattern(const std::vector<std::vector<int>>& rows) {
  PatternCheck check = check_pattern(rows);
  if (check == PatternCheck::bad_shape)
    throw std::invalid_argument("malformed pattern shape: row i must have exactly i entries");
  return check == PatternCheck::ok;
}

GTPattern GTPattern::from_rows(std::vector<std::vector<int>> rows) {
  switch (check_pattern(rows)) {
    case PatternCheck::ok:
      break;
    case PatternCheck::bad_shape:
      throw std::invalid_argument("malformed pattern shape: row i must have exactly i entries");
    case PatternCheck::bad_entries:
      throw std::invalid_argument("pattern entries must be positive and strictly increasing");
    case PatternCheck::not_interlaced:
      throw std::invalid_argument("consecutive pattern rows do not interlace");
  }
  std::vector<RowSet> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.emplace_back(std::move(row));
  return GTPattern(std::move(out));
}

ExactCount count_formula(const RowSet& bottom) {
  if (bottom.empty()) throw std::invalid_argument("bottom row must be nonempty");
  ExactCount num = pair_product(bottom, bottom);
  ExactCount den = superfactorial(bottom.size());
  ExactCount quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw std::logic_error("pair product is not divisible by the superfactorial");
  return quot;
}

namespace {

// Sum over all rows interlacing below-to-above: the row above `row` has one
// entry fewer, with t[j] ranging over [row[j], row[j+1] - 1].
ExactCount count_above(const std::vector<int>& row,
                       std::map<std::vector<int>, ExactCount>& memo) {
  const size_t n = row.size();
  if (n == 1) return 1;

  std::vector<int> key(row);
  for (int& v : key) v -= row[0];
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  std::vector<int> t(row.begin(), row.end() - 1);
  auto advance = [&]() -> bool {
    for (size_t j = t.size(); j-- > 0;) {
      if (t[j] < row[j + 1] - 1) {
        ++t[j];
        return true;
      }
      t[j] = row[j];
    }
    return false;
  };

  ExactCount total(0);
  do {
    total += count_above(t, memo);
  } while (advance());

  memo.emplace(std::move(key), total);
  return total;
}

// Generates rows top-down in lexicographic order. A partial choice of rows
// 1..i always extends to the bottom row: entry j of row i is confined to
//   [bottom[j], bottom[j + n - i] - (n - i)]
// which is exactly the set of values reachable by interlacing chains.
struct PatternEnumerator {
  const std::vector<int>& bottom;
  const std::function<bool(const GTPattern&)>& visit;
  int n;
  std::vector<std::vector<int>> chosen;  // rows 1..n-1
  ExactCount visited{0};
  bool stopped = false;

  PatternEnumerator(const std::vector<int>& bottom_row,
                    const std::function<bool(const GTPattern&)>& visitor)
      : bottom(bottom_row), visit(visitor), n(static_cast<int>(bottom_row.size())) {
    chosen.resize(n > 0 ? static_cast<size_t>(n - 1) : 0);
  }

  void descend(int level) {
    if (stopped) return;
    if (level == n) {
      emit();
      return;
    }
    chosen[static_cast<size_t>(level - 1)].assign(static_cast<size_t>(level), 0);
    fill_entry(level, 0);
  }

  void fill_entry(int level, int jj) {
    if (jj == level) {
      descend(level + 1);
      return;
    }
    std::vector<int>& x = chosen[static_cast<size_t>(level - 1)];
    const int steps = n - level;
    int lo = bottom[static_cast<size_t>(jj)];
    int hi = bottom[static_cast<size_t>(jj + steps)] - steps;
    if (level > 1) {
      const std::vector<int>& above = chosen[static_cast<size_t>(level - 2)];
      if (jj > 0) lo = std::max(lo, above[static_cast<size_t>(jj - 1)] + 1);
      if (jj <= level - 2) hi = std::min(hi, above[static_cast<size_t>(jj)]);
    }
    for (int v = lo; v <= hi && !stopped; ++v) {
      x[static_cast<size_t>(jj)] = v;
      fill_entry(level, jj + 1);
    }
  }

  void emit() {
    std::vector<std::vector<int>> rows(chosen.begin(), chosen.end());
    rows.push_back(bottom);
    GTPattern pattern = GTPattern::from_rows(std::move(rows));
    ++visited;
    if (!visit(pattern)) stopped = true;
  }
};

}  // namespace

ExactCount count_recursive(const RowSet& bottom) {
  if (bottom.empty()) throw std::invalid_argument("bottom row must be nonempty");
  std::map<std::vector<int>, ExactCount> memo;
  return count_above(bottom.positions(), memo);
}

ExactCount enumerate_patterns(const RowSet& bottom,
                              const std::function<bool(const GTPattern&)>& visit) {
  if (bottom.empty()) throw std::invalid_argument("bottom row must be nonempty");
  PatternEnumerator gen(bottom.positions(), visit);
  gen.descend(1);
  return gen.visited;
}

std::vector<GTPattern> all_patterns(const RowSet& bottom) {
  std::vector<GTPattern> out;
  enumerate_patterns(bottom, [&](const GTPattern& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace lozenge
