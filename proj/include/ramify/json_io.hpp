#pragma once

#include <json.hpp>

#include "ramify/artin_schreier.hpp"
#include "ramify/filtered_group.hpp"
#include "ramify/herbrand_fn.hpp"
#include "ramify/norm_filtration.hpp"

namespace ramify {

using Json = nlohmann::ordered_json;

// Rationals and indices are written in their exact textual forms ("3/4", "i:5/2", "(1/2,3)").

Json render(const ExtensionReport& r);
Json render(const NormIndexResult& r);
Json render(const ExtStep& s);
/// {mode, c_branch: [{from, to, slope, offset}], i_branch: [{from, to, slope, offset: [first, second]}]}.
Json render(const HerbrandFn& fn);
/// {cyclic_factors, modulo, numbering, carrier?, jumps: [{index, generators}]}.
Json render(const FilteredGroup& fg);

ExtensionReport parse_extension_report(const Json& j);
NormIndexResult parse_norm_index_result(const Json& j);
ExtStep parse_ext_step(const Json& j);
HerbrandFn parse_herbrand_fn(const Json& j);
FilteredGroup parse_filtered_group(const Json& j);

}  // namespace ramify
