#include "lozenge/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace lozenge {

namespace {

// x-order of a cell within its row, in half-units from the row's left end.
// Upper rows interleave up1, down1, up2, ...; lower rows down1, up1, down2.
int row_order_key(const TriangleCell& c) {
  const bool up_first = (c.half == HalfPlane::upper);
  if (c.kind == CellKind::up) return up_first ? 2 * c.index - 1 : 2 * c.index;
  return up_first ? 2 * c.index : 2 * c.index - 1;
}

// Edge adjacency; `upper_rows` identifies the row whose verticals cross the
// diagonal.
bool cells_adjacent(const TriangleCell& up, const TriangleCell& down, int upper_rows) {
  if (up.kind != CellKind::up || down.kind != CellKind::down) return false;
  if (up.half == down.half && up.row == down.row)
    return std::abs(row_order_key(up) - row_order_key(down)) == 1;
  if (up.half == HalfPlane::upper && down.half == HalfPlane::upper)
    return down.row == up.row + 1 && down.index == up.index;
  if (up.half == HalfPlane::lower && down.half == HalfPlane::lower)
    return down.row == up.row + 1 && down.index == up.index;
  if (up.half == HalfPlane::upper && down.half == HalfPlane::lower)
    return up.row == upper_rows && down.row == 1 && down.index == up.index;
  return false;
}

}  // namespace

LozengeKind Lozenge::kind() const {
  if (up.half != down.half || up.row != down.row) return LozengeKind::vertical;
  return row_order_key(up) < row_order_key(down) ? LozengeKind::right_tilted
                                                 : LozengeKind::left_tilted;
}

Region::Region(int upper_rows, int lower_rows, int diag_len, RowSet dents_up, RowSet dents_down)
    : upper_rows_(upper_rows),
      lower_rows_(lower_rows),
      diag_len_(diag_len),
      dents_up_(std::move(dents_up)),
      dents_down_(std::move(dents_down)) {}

Region build_half_hexagon(int rows, int diag_len) {
  if (rows < 1) throw std::invalid_argument("half-hexagon needs at least one row");
  if (diag_len < rows)
    throw std::invalid_argument("half-hexagon needs a diagonal at least as long as its row count");
  return Region(rows, 0, diag_len, RowSet(), RowSet());
}

Region build_dented_hexagon(int upper_rows, int lower_rows, int diag_len, RowSet dents_up,
                            RowSet dents_down) {
  if (upper_rows < 1 || lower_rows < 1)
    throw std::invalid_argument("hexagon needs at least one row in each half");
  if (diag_len < upper_rows || diag_len < lower_rows)
    throw std::invalid_argument("hexagon needs a diagonal at least as long as both row counts");
  if ((!dents_up.empty() && dents_up.back() > diag_len) ||
      (!dents_down.empty() && dents_down.back() > diag_len))
    throw std::invalid_argument("diagonal must be at least as long as the last dent position");
  return Region(upper_rows, lower_rows, diag_len, std::move(dents_up), std::move(dents_down));
}

bool Region::contains(const TriangleCell& c) const {
  if (c.row < 1 || c.index < 1) return false;
  if (c.half == HalfPlane::upper) {
    if (c.row > upper_rows_) return false;
    const int ups = upper_row_ups(c.row);
    if (c.kind == CellKind::up)
      return c.index <= ups && !(c.row == upper_rows_ && dents_up_.contains(c.index));
    return c.index <= ups - 1;
  }
  if (c.row > lower_rows_) return false;
  const int downs = lower_row_downs(c.row);
  if (c.kind == CellKind::down)
    return c.index <= downs && !(c.row == 1 && dents_down_.contains(c.index));
  return c.index <= downs - 1;
}

std::vector<TriangleCell> Region::cells() const {
  std::vector<TriangleCell> out;
  for (int i = 1; i <= upper_rows_; ++i) {
    const int ups = upper_row_ups(i);
    for (int j = 1; j <= ups; ++j) {
      TriangleCell up{HalfPlane::upper, i, j, CellKind::up};
      if (contains(up)) out.push_back(up);
      if (j < ups) out.push_back({HalfPlane::upper, i, j, CellKind::down});
    }
  }
  for (int r = 1; r <= lower_rows_; ++r) {
    const int downs = lower_row_downs(r);
    for (int j = 1; j <= downs; ++j) {
      TriangleCell down{HalfPlane::lower, r, j, CellKind::down};
      if (contains(down)) out.push_back(down);
      if (j < downs) out.push_back({HalfPlane::lower, r, j, CellKind::up});
    }
  }
  return out;
}

long long Region::up_cell_count() const {
  long long total = 0;
  for (int i = 1; i <= upper_rows_; ++i) total += upper_row_ups(i);
  total -= dents_up_.size();
  for (int r = 1; r <= lower_rows_; ++r) total += lower_row_downs(r) - 1;
  return total;
}

long long Region::down_cell_count() const {
  long long total = 0;
  for (int i = 1; i <= upper_rows_; ++i) total += upper_row_ups(i) - 1;
  for (int r = 1; r <= lower_rows_; ++r) total += lower_row_downs(r);
  total -= dents_down_.size();
  return total;
}

Tiling pattern_to_tiling(const GTPattern& pattern, int diag_len) {
  const int m = pattern.row_count();
  if (diag_len < m)
    throw std::invalid_argument("diagonal shorter than the pattern height");
  for (int i = 1; i <= m; ++i)
    if (pattern.row(i).back() > diag_len - m + i)
      throw std::invalid_argument("pattern entry exceeds its row width");

  Tiling tiling;
  const RowSet* above = nullptr;
  for (int i = 1; i <= m; ++i) {
    const RowSet& verts = pattern.row(i);
    for (int pos : verts) {
      if (i < m)
        tiling.lozenges.push_back({{HalfPlane::upper, i, pos, CellKind::up},
                                   {HalfPlane::upper, i + 1, pos, CellKind::down},
                                   false});
      else
        tiling.lozenges.push_back({{HalfPlane::upper, m, pos, CellKind::up},
                                   {HalfPlane::lower, 1, pos, CellKind::down},
                                   true});
    }
    // The remaining cells of the row pair up left to right into tilted
    // lozenges; interlacing guarantees the runs between covered cells have
    // even length.
    const int ups = diag_len - m + i;
    TriangleCell pending{};
    bool have_pending = false;
    auto take = [&](const TriangleCell& cell) {
      if (!have_pending) {
        pending = cell;
        have_pending = true;
        return;
      }
      if (row_order_key(cell) != row_order_key(pending) + 1)
        throw std::logic_error("row cells do not pair up into tilted lozenges");
      if (pending.kind == CellKind::up)
        tiling.lozenges.push_back({pending, cell, false});
      else
        tiling.lozenges.push_back({cell, pending, false});
      have_pending = false;
    };
    for (int j = 1; j <= ups; ++j) {
      if (!verts.contains(j)) take({HalfPlane::upper, i, j, CellKind::up});
      if (j < ups && !(above && above->contains(j)))
        take({HalfPlane::upper, i, j, CellKind::down});
    }
    if (have_pending) throw std::logic_error("row cells do not pair up into tilted lozenges");
    above = &verts;
  }
  return tiling;
}

GTPattern tiling_to_pattern(const Tiling& tiling) {
  if (tiling.lozenges.empty()) throw std::invalid_argument("empty tiling");
  int rows = 0;
  for (const Lozenge& loz : tiling.lozenges) {
    if (loz.up.half != HalfPlane::upper ||
        (loz.down.half != HalfPlane::upper && !loz.protruding))
      throw std::invalid_argument("not a tiling of an upper half-hexagon");
    rows = std::max(rows, loz.up.row);
  }
  int diag = 0;
  for (const Lozenge& loz : tiling.lozenges)
    if (loz.up.row == rows) diag = std::max(diag, loz.up.index);

  Region region = build_half_hexagon(rows, diag);
  if (!tiling_covers(region, tiling))
    throw std::invalid_argument("incomplete or overlapping tiling");

  std::vector<std::vector<int>> vert_rows(static_cast<size_t>(rows));
  for (const Lozenge& loz : tiling.lozenges)
    if (loz.kind() == LozengeKind::vertical)
      vert_rows[static_cast<size_t>(loz.up.row - 1)].push_back(loz.up.index);
  for (auto& row : vert_rows) std::sort(row.begin(), row.end());
  return GTPattern::from_rows(std::move(vert_rows));
}

Tiling glue_halves(const GTPattern& upper, const GTPattern& lower, int diag_len) {
  Tiling top = pattern_to_tiling(upper, diag_len);
  Tiling mirrored = pattern_to_tiling(lower, diag_len);
  const int m = upper.row_count();
  const int n = lower.row_count();

  Tiling out;
  for (const Lozenge& loz : top.lozenges)
    if (!loz.protruding) out.lozenges.push_back(loz);

  // The lower pattern describes the reflected half: row i maps to lower row
  // n - i + 1, orientations swap, indices are unchanged.
  auto reflect = [n](const TriangleCell& c) {
    return TriangleCell{HalfPlane::lower, n - c.row + 1, c.index,
                        c.kind == CellKind::up ? CellKind::down : CellKind::up};
  };
  for (const Lozenge& loz : mirrored.lozenges) {
    if (loz.protruding) continue;
    out.lozenges.push_back({reflect(loz.down), reflect(loz.up), false});
  }

  if (upper.bottom_row() == lower.bottom_row()) {
    for (int pos : upper.bottom_row())
      out.lozenges.push_back({{HalfPlane::upper, m, pos, CellKind::up},
                              {HalfPlane::lower, 1, pos, CellKind::down},
                              false});
  }
  return out;
}

RowSet crossing_positions(const Tiling& tiling) {
  std::vector<int> pos;
  for (const Lozenge& loz : tiling.lozenges)
    if (loz.up.half == HalfPlane::upper && loz.down.half == HalfPlane::lower)
      pos.push_back(loz.up.index);
  return RowSet::from_unsorted(std::move(pos));
}

bool tiling_covers(const Region& region, const Tiling& tiling) {
  std::map<TriangleCell, int> seen;
  for (const Lozenge& loz : tiling.lozenges) {
    if (loz.up.kind != CellKind::up || loz.down.kind != CellKind::down) return false;
    if (!cells_adjacent(loz.up, loz.down, region.upper_rows())) return false;
    if (loz.protruding) {
      if (!region.allows_protruding()) return false;
      if (loz.up.half != HalfPlane::upper || loz.up.row != region.upper_rows()) return false;
      TriangleCell mirror{HalfPlane::lower, 1, loz.up.index, CellKind::down};
      if (!(loz.down == mirror)) return false;
      if (!region.contains(loz.up)) return false;
      if (++seen[loz.up] > 1) return false;
    } else {
      if (!region.contains(loz.up) || !region.contains(loz.down)) return false;
      if (++seen[loz.up] > 1) return false;
      if (++seen[loz.down] > 1) return false;
    }
  }
  return static_cast<long long>(seen.size()) == region.cell_count();
}

namespace {

// Backtracking search state. Cells are indexed in row-major order; the pivot
// is always the first uncovered cell, so its earlier neighbours are covered
// and at most the rightward and downward lozenges branch.
struct Searcher {
  struct Option {
    int partner;   // cell id; -1 = protruding half-lozenge
    int crossing;  // diagonal position when the lozenge crosses it, else 0
  };

  std::vector<TriangleCell> cell_list;
  std::vector<std::vector<Option>> options;
  std::vector<char> covered;
  std::vector<char> allowed_pos;  // by diagonal position; used when restricted
  bool restricted = false;
  bool collect = false;
  bool stopped = false;
  ExactCount found{0};
  std::vector<std::pair<int, int>> placed;
  const std::function<bool(const Tiling&)>* visit = nullptr;

  explicit Searcher(const Region& region) {
    cell_list = region.cells();
    std::map<TriangleCell, int> id;
    for (size_t k = 0; k < cell_list.size(); ++k) id[cell_list[k]] = static_cast<int>(k);
    auto find = [&](const TriangleCell& c) {
      auto it = id.find(c);
      return it == id.end() ? -1 : it->second;
    };

    options.resize(cell_list.size());
    for (size_t k = 0; k < cell_list.size(); ++k) {
      const TriangleCell c = cell_list[k];
      auto add = [&](TriangleCell partner, int crossing) {
        int p = find(partner);
        if (p >= 0) options[k].push_back({p, crossing});
      };
      if (c.kind == CellKind::up) {
        if (c.half == HalfPlane::upper) {
          add({HalfPlane::upper, c.row, c.index - 1, CellKind::down}, 0);
          add({HalfPlane::upper, c.row, c.index, CellKind::down}, 0);
          if (c.row < region.upper_rows())
            add({HalfPlane::upper, c.row + 1, c.index, CellKind::down}, 0);
          else if (region.lower_rows() > 0)
            add({HalfPlane::lower, 1, c.index, CellKind::down}, c.index);
          else
            options[k].push_back({-1, c.index});  // protruding
        } else {
          add({HalfPlane::lower, c.row, c.index, CellKind::down}, 0);
          add({HalfPlane::lower, c.row, c.index + 1, CellKind::down}, 0);
          if (c.row < region.lower_rows())
            add({HalfPlane::lower, c.row + 1, c.index, CellKind::down}, 0);
        }
      } else {
        if (c.half == HalfPlane::upper) {
          if (c.row > 1) add({HalfPlane::upper, c.row - 1, c.index, CellKind::up}, 0);
          add({HalfPlane::upper, c.row, c.index, CellKind::up}, 0);
          add({HalfPlane::upper, c.row, c.index + 1, CellKind::up}, 0);
        } else {
          if (c.row > 1)
            add({HalfPlane::lower, c.row - 1, c.index, CellKind::up}, 0);
          else
            add({HalfPlane::upper, region.upper_rows(), c.index, CellKind::up}, c.index);
          add({HalfPlane::lower, c.row, c.index - 1, CellKind::up}, 0);
          add({HalfPlane::lower, c.row, c.index, CellKind::up}, 0);
        }
      }
    }
    covered.assign(cell_list.size(), 0);
  }

  void run(size_t from) {
    if (stopped) return;
    size_t c = from;
    while (c < cell_list.size() && covered[c]) ++c;
    if (c == cell_list.size()) {
      leaf();
      return;
    }
    for (const Option& opt : options[c]) {
      if (stopped) return;
      if (restricted && opt.crossing > 0 && !allowed_pos[static_cast<size_t>(opt.crossing)])
        continue;
      if (opt.partner < 0) {
        covered[c] = 1;
        if (collect) placed.emplace_back(static_cast<int>(c), -1);
        run(c + 1);
        if (collect) placed.pop_back();
        covered[c] = 0;
      } else if (!covered[static_cast<size_t>(opt.partner)]) {
        covered[c] = covered[static_cast<size_t>(opt.partner)] = 1;
        if (collect) placed.emplace_back(static_cast<int>(c), opt.partner);
        run(c + 1);
        if (collect) placed.pop_back();
        covered[c] = covered[static_cast<size_t>(opt.partner)] = 0;
      }
    }
  }

  void leaf() {
    ++found;
    if (!collect) return;
    Tiling tiling;
    for (auto [a, b] : placed) {
      const TriangleCell& ca = cell_list[static_cast<size_t>(a)];
      if (b < 0) {
        tiling.lozenges.push_back(
            {ca, {HalfPlane::lower, 1, ca.index, CellKind::down}, true});
      } else {
        const TriangleCell& cb = cell_list[static_cast<size_t>(b)];
        if (ca.kind == CellKind::up)
          tiling.lozenges.push_back({ca, cb, false});
        else
          tiling.lozenges.push_back({cb, ca, false});
      }
    }
    if (!(*visit)(tiling)) stopped = true;
  }
};

bool balanced(const Region& region) {
  // Lozenges cover one cell of each orientation, so full hexagons need equal
  // counts; half-hexagons absorb the excess in protruding verticals.
  return region.lower_rows() == 0 || region.up_cell_count() == region.down_cell_count();
}

}  // namespace

ExactCount brute_force_count(const Region& region) {
  if (!balanced(region)) return 0;
  Searcher search(region);
  search.run(0);
  return search.found;
}

ExactCount brute_force_tilings(const Region& region,
                               const std::function<bool(const Tiling&)>& visit) {
  if (!balanced(region)) return 0;
  Searcher search(region);
  search.collect = true;
  search.visit = &visit;
  search.run(0);
  return search.found;
}

ExactCount brute_force_count_restricted(const Region& region, const RowSet& crossings,
                                        const RowSet& allowed) {
  if (region.lower_rows() == 0)
    throw std::invalid_argument("restricted counting needs a full hexagon");
  const int need_upper = region.upper_rows() - region.dents_up().size();
  const int need_lower = region.lower_rows() - region.dents_down().size();
  if (need_upper != need_lower || need_upper != crossings.size())
    throw std::invalid_argument("crossing set size does not match the region's dent layout");
  RowSet dents = row_union(region.dents_up(), region.dents_down());
  if (!row_intersection(allowed, dents).empty())
    throw std::invalid_argument("allowed crossing positions overlap the dents");
  if (!allowed.empty() && allowed.back() > region.diag_len())
    throw std::invalid_argument("allowed crossing positions exceed the diagonal");
  if (allowed.size() < crossings.size()) return 0;
  if (!balanced(region)) return 0;

  Searcher search(region);
  search.restricted = true;
  search.allowed_pos.assign(static_cast<size_t>(region.diag_len()) + 1, 0);
  for (int p : allowed) search.allowed_pos[static_cast<size_t>(p)] = 1;
  search.run(0);
  return search.found;
}

ExactCount brute_force_count_bottom_row(int rows, int diag_len, const RowSet& bottom) {
  if (bottom.size() != rows)
    throw std::invalid_argument("bottom row size must equal the row count");
  if (!bottom.empty() && bottom.back() > diag_len)
    throw std::invalid_argument("bottom position exceeds the diagonal");
  Region half = build_half_hexagon(rows, diag_len);
  ExactCount matched(0);
  brute_force_tilings(half, [&](const Tiling& tiling) {
    if (crossing_positions(tiling) == bottom) ++matched;
    return true;
  });
  return matched;
}

}  // namespace lozenge
