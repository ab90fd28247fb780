#pragma once

#include <string>
#include <string_view>

#include "shuffles/shuffle.hpp"

namespace shuffles {

/// Shuffle document (UTF-8 JSON):
///   {"label": str,
///    "components": [{"domains": [{"kind": "finite_prefix"|"finite_range"|
///                                         "plus_inf"|"minus_inf",
///                                 "m": int?, "n": int?}...],
///                    "expr": str}
///                   | {"table": [v0, ...], "tail": "identity"|"none",
///                      "sign": "+"|"-"} ...],
///    "omega_family": optional {"domains": [...], "expr": str}}
/// Expression variables are i0, i1, ... per domain, plus t inside the
/// omega-family template.
MixedShuffle shuffle_from_json(std::string_view text);
MixedShuffle shuffle_from_file(const std::string& path);

/// Inverse of shuffle_from_json for expression- and table-backed
/// presentations; other value maps raise not_serializable.
std::string shuffle_to_json(const MixedShuffle& s, int indent = 2);

} // namespace shuffles
