#pragma once

#include <functional>
#include <vector>

#include "lozenge/core.hpp"
#include "lozenge/gtp.hpp"

namespace lozenge {

enum class HalfPlane { upper, lower };
enum class CellKind { up, down };  // triangle orientation

// One unit triangle. Rows are 1-based: upper rows count from the top side
// down to the horizontal diagonal, lower rows from the diagonal downward.
// The index counts cells of the same orientation within a row from the left.
// Up-cells of the last upper row and down-cells of the first lower row sit
// on the diagonal and share the position scale 1..N.
struct TriangleCell {
  HalfPlane half = HalfPlane::upper;
  int row = 0;
  int index = 0;
  CellKind kind = CellKind::up;
  friend bool operator==(const TriangleCell&, const TriangleCell&) = default;
  friend auto operator<=>(const TriangleCell&, const TriangleCell&) = default;
};

enum class LozengeKind { vertical, left_tilted, right_tilted };

// Two edge-adjacent triangles, one of each orientation. A protruding lozenge
// is a bottom-row vertical of a half-hexagon tiling: its down half is the
// mirror cell just past the diagonal, outside the region.
struct Lozenge {
  TriangleCell up;
  TriangleCell down;
  bool protruding = false;
  LozengeKind kind() const;
  friend bool operator==(const Lozenge&, const Lozenge&) = default;
};

struct Tiling {
  std::vector<Lozenge> lozenges;
};

// A hexagon bisected by a horizontal diagonal of length diag_len, with
// upper_rows triangle rows above and lower_rows below (0 for a bare
// half-hexagon). Dents remove up-cells of the last upper row and down-cells
// of the first lower row. Upper row i holds diag_len - upper_rows + i
// up-cells; lower row r holds diag_len - r + 1 down-cells; rows of the upper
// half start and end with an up-cell, rows of the lower half with a
// down-cell.
class Region {
 public:
  int upper_rows() const { return upper_rows_; }
  int lower_rows() const { return lower_rows_; }
  int diag_len() const { return diag_len_; }
  const RowSet& dents_up() const { return dents_up_; }
  const RowSet& dents_down() const { return dents_down_; }

  // Bottom-row verticals may protrude past the diagonal only when there is
  // no lower half.
  bool allows_protruding() const { return lower_rows_ == 0; }

  int upper_row_ups(int row) const { return diag_len_ - upper_rows_ + row; }
  int lower_row_downs(int row) const { return diag_len_ - row + 1; }

  bool contains(const TriangleCell& cell) const;

  // Row-major, left to right; dents excluded.
  std::vector<TriangleCell> cells() const;

  long long up_cell_count() const;
  long long down_cell_count() const;
  long long cell_count() const { return up_cell_count() + down_cell_count(); }

 private:
  friend Region build_half_hexagon(int, int);
  friend Region build_dented_hexagon(int, int, int, RowSet, RowSet);
  Region(int upper_rows, int lower_rows, int diag_len, RowSet dents_up, RowSet dents_down);

  int upper_rows_ = 0;
  int lower_rows_ = 0;
  int diag_len_ = 0;
  RowSet dents_up_;
  RowSet dents_down_;
};

// Upper half only, dent-free; requires 1 <= rows <= diag_len.
Region build_half_hexagon(int rows, int diag_len);

// Full hexagon minus up-cells at dents_up and down-cells at dents_down.
// The dent sets may be smaller than the row counts (including empty), which
// covers the undented hexagon and regions whose tilings carry forced
// diagonal-crossing verticals.
Region build_dented_hexagon(int upper_rows, int lower_rows, int diag_len,
                            RowSet dents_up, RowSet dents_down);

// The unique half-hexagon tiling whose verticals in row i sit at the
// positions of pattern row i. Bottom-row verticals protrude past the
// diagonal and are flagged.
Tiling pattern_to_tiling(const GTPattern& pattern, int diag_len);

// Inverse of pattern_to_tiling for complete tilings of a dent-free
// half-hexagon; incomplete or overlapping input is rejected.
GTPattern tiling_to_pattern(const Tiling& tiling);

// Combines an upper-half tiling with a reflected lower-half tiling.
// Equal bottom rows: the protruding verticals merge pairwise into lozenges
// crossing the diagonal, giving a tiling of the undented hexagon. Different
// bottom rows: all protruding verticals are omitted, giving a tiling of the
// dented hexagon with dents at the two bottom rows.
Tiling glue_halves(const GTPattern& upper, const GTPattern& lower, int diag_len);

// Exhaustive backtracking directly over cells: always covers the first
// uncovered cell in row-major order with each of its feasible lozenges.
// Returns 0 for untileable regions. Single-threaded and deterministic.
ExactCount brute_force_count(const Region& region);

// Visits every complete tiling in search order; the visitor returns false to
// stop. Returns the number of tilings visited.
ExactCount brute_force_tilings(const Region& region,
                               const std::function<bool(const Tiling&)>& visit);

// Tilings whose diagonal-crossing verticals all sit in `allowed`. The region
// must force |crossings| such verticals per tiling, i.e. upper_rows minus
// |dents_up| and lower_rows minus |dents_down| must both equal its size.
ExactCount brute_force_count_restricted(const Region& region, const RowSet& crossings,
                                        const RowSet& allowed);

// Tilings of the (rows x diag_len) half-hexagon whose protruding bottom-row
// verticals sit exactly at `bottom`.
ExactCount brute_force_count_bottom_row(int rows, int diag_len, const RowSet& bottom);

// Positions of verticals crossing (or protruding past) the diagonal.
RowSet crossing_positions(const Tiling& tiling);

// Lozenges pairwise disjoint, each pair edge-adjacent, union equal to the
// region; protruding halves allowed only for half-hexagon regions.
bool tiling_covers(const Region& region, const Tiling& tiling);

}  // namespace lozenge
