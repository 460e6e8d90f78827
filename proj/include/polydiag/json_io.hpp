#pragma once

#include <string>

#include <json.hpp>

#include "polydiag/hodge.hpp"
#include "polydiag/limits.hpp"
#include "polydiag/partitions.hpp"
#include "polydiag/polyring.hpp"
#include "polydiag/strata.hpp"
#include "polydiag/trees.hpp"

namespace polydiag {

using json = nlohmann::json;

// {"n": 9, "blocks": [[1,2,3,5,7],[9],[4,6,8]]}, blocks by ascending minimum.
// The parser accepts any valid block order and canonicalizes.
json to_json(const SetPartition& p);
SetPartition partition_from_json(const json& j);

// {"n": 9, "partitions": [ <partition>, ... ]} ordered coarse to fine.
json to_json(const Chain& c);
Chain chain_from_json(const json& j);

// {"n": 9, "vertices": [{"label":[1,...,9],"parent":null,"level":0}, ...]};
// vertex 0 is the root. The parser also accepts parent -1 for the root.
json to_json(const LeveledTree& t);
LeveledTree leveled_tree_from_json(const json& j);

// Same vertex list without levels (a "level" field, if present, is ignored).
json to_json(const RootedTree& t);
RootedTree rooted_tree_from_json(const json& j);

// {"n": 4, "members": [[1,2,3,4],[1,2],[3,4]]}.
json to_json(const Nest& nest);
Nest nest_from_json(const json& j);

// {"n":4,"exponents":[[null,"3","1","1"],...]}; rationals as "p/q" strings
// (integer numbers are also accepted on input).
json to_json(const ApproachProfile& p);
ApproachProfile profile_from_json(const json& j);

// {"n":4,"m":2,"curves":[[["0"],["0"]],[["0","0","0","1"],["0"]],...]}:
// per point, per coordinate, ascending t-coefficients.
CurveFamily curves_from_json(const json& j);
json to_json(const CurveFamily& c);

// {"var":"u","coeffs":["1","4","1"]}: ascending powers, decimal strings.
json to_json(const UPoly& p);
UPoly upoly_from_json(const json& j);

// {"var":"x","coeffs":[["0"],["1","2"],...]}: per x-power, the u-coefficients.
json to_json(const XPoly& p);
XPoly xpoly_from_json(const json& j);

json to_json(const ConsistencyReport& r);
json to_json(const BundleDescription& d);
json to_json(const Brick& b);

} // namespace polydiag
