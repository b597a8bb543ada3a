#include "lozenge/jsonio.hpp"

#include <stdexcept>

namespace lozenge {

namespace {

int int_from(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<int>();
}

const char* half_name(HalfPlane half) { return half == HalfPlane::upper ? "upper" : "lower"; }
const char* kind_name(CellKind kind) { return kind == CellKind::up ? "up" : "down"; }

Json cell_to_json(const TriangleCell& c) {
  return Json::array({half_name(c.half), c.row, c.index, kind_name(c.kind)});
}

}  // namespace

Json to_json(const RowSet& set) { return Json(set.positions()); }

RowSet rowset_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("row set must be a JSON array of integers");
  std::vector<int> positions;
  positions.reserve(j.size());
  for (const auto& e : j) positions.push_back(int_from(e, "row set entry"));
  return RowSet(std::move(positions));
}

Json to_json(const GTPattern& pattern) {
  Json rows = Json::array();
  for (const RowSet& row : pattern.rows()) rows.push_back(Json(row.positions()));
  return rows;
}

GTPattern pattern_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("pattern must be a JSON array of rows");
  std::vector<std::vector<int>> rows;
  rows.reserve(j.size());
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("pattern row must be a JSON array");
    rows.emplace_back();
    for (const auto& e : row) rows.back().push_back(int_from(e, "pattern entry"));
  }
  return GTPattern::from_rows(std::move(rows));
}

Json to_json(const Region& region) {
  return Json{{"m", region.upper_rows()},
              {"n", region.lower_rows()},
              {"N", region.diag_len()},
              {"U", to_json(region.dents_up())},
              {"L", to_json(region.dents_down())}};
}

Region region_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("region must be a JSON object");
  const int m = int_from(j.at("m"), "m");
  const int n = int_from(j.at("n"), "n");
  const int diag = int_from(j.at("N"), "N");
  RowSet dents_up = j.contains("U") ? rowset_from_json(j.at("U")) : RowSet();
  RowSet dents_down = j.contains("L") ? rowset_from_json(j.at("L")) : RowSet();
  if (n == 0) {
    if (!dents_up.empty() || !dents_down.empty())
      throw std::invalid_argument("half-hexagon regions cannot carry dents");
    return build_half_hexagon(m, diag);
  }
  return build_dented_hexagon(m, n, diag, std::move(dents_up), std::move(dents_down));
}

Json to_json(const Tiling& tiling) {
  Json out = Json::array();
  for (const Lozenge& loz : tiling.lozenges) {
    Json entry{{"cells", Json::array({cell_to_json(loz.up), cell_to_json(loz.down)})}};
    if (loz.protruding) entry["protruding"] = true;
    out.push_back(std::move(entry));
  }
  return out;
}

Json to_json(const ShuffleSpec& spec) {
  return Json{{"U", to_json(spec.U)}, {"L", to_json(spec.L)}, {"S", to_json(spec.S)}};
}

ShuffleSpec shuffle_spec_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("shuffle spec must be a JSON object");
  return ShuffleSpec(rowset_from_json(j.at("U")), rowset_from_json(j.at("L")),
                     rowset_from_json(j.at("S")));
}

Json to_json(const RestrictedSpec& spec) {
  return Json{{"U", to_json(spec.U)},
              {"L", to_json(spec.L)},
              {"V", to_json(spec.V)},
              {"B", to_json(spec.B)}};
}

RestrictedSpec restricted_spec_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("restricted spec must be a JSON object");
  return RestrictedSpec(rowset_from_json(j.at("U")), rowset_from_json(j.at("L")),
                        rowset_from_json(j.at("V")), rowset_from_json(j.at("B")));
}

}  // namespace lozenge
