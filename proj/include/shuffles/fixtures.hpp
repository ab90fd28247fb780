#pragma once

#include <string>
#include <vector>

#include "shuffles/shuffle.hpp"

namespace shuffles::fixtures {

/// Bundled presentations, by name: identity, evens_odds, three_ladder,
/// sharkovskii, sharkovskii_reversed.
std::vector<std::string> names();
const std::string& document(const std::string& name);
MixedShuffle load(const std::string& name);

} // namespace shuffles::fixtures
