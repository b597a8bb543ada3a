#pragma once

#include <json.hpp>

#include "lozenge/gtp.hpp"
#include "lozenge/lattice.hpp"
#include "lozenge/shuffle.hpp"

namespace lozenge {

// Insertion-ordered objects keep the wire format stable.
using Json = nlohmann::ordered_json;

// RowSet <-> ascending array of integers, e.g. [1,3,6,8].
Json to_json(const RowSet& set);
RowSet rowset_from_json(const Json& j);

// GTPattern <-> array of arrays, top row first: [[4],[2,6],[1,4,7],[1,3,6,8]].
Json to_json(const GTPattern& pattern);
GTPattern pattern_from_json(const Json& j);

// Region <-> {"m":..., "n":..., "N":..., "U":[...], "L":[...]} where U and L
// are the dent sets; n = 0 denotes a half-hexagon.
Json to_json(const Region& region);
Region region_from_json(const Json& j);

// Tiling -> list of {"cells": [[half,row,index,orientation], x2]}; protruding
// bottom-row verticals carry "protruding": true.
Json to_json(const Tiling& tiling);

// {"U":[...], "L":[...], "S":[...]}
Json to_json(const ShuffleSpec& spec);
ShuffleSpec shuffle_spec_from_json(const Json& j);

// {"U":[...], "L":[...], "V":[...], "B":[...]}
Json to_json(const RestrictedSpec& spec);
RestrictedSpec restricted_spec_from_json(const Json& j);

}  // namespace lozenge
