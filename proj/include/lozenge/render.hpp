#pragma once

#include <string>

#include "lozenge/lattice.hpp"

namespace lozenge {

struct SvgStyle {
  double scale = 40.0;        // pixels per unit triangle side
  double margin = 4.0;        // pixels of padding around the drawing
  bool show_diagonal = true;  // dashed line along the horizontal diagonal
  bool dents_white = true;    // draw dents filled white instead of omitting them
  std::string cell_up = "#d9d9d9";
  std::string cell_down = "#bdbdbd";
  std::string dent = "#ffffff";
  std::string vertical = "#e6c24d";
  std::string left_tilted = "#8fb8de";
  std::string right_tilted = "#a8c686";
  std::string stroke = "#333333";
  double stroke_width = 1.0;
};

// One triangle polygon per cell (class "cell"), dents white (class "dent")
// or omitted, the diagonal dashed. Output is byte-deterministic.
std::string region_to_svg(const Region& region, const SvgStyle& style = {});

// One rhombus polygon per lozenge (class "lozenge"), filled by orientation.
// Row offsets are fixed by the largest upper row present in the tiling.
std::string tiling_to_svg(const Tiling& tiling, const SvgStyle& style = {});

}  // namespace lozenge
