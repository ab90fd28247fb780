#include "shuffles/fixtures.hpp"

#include <array>
#include <utility>

#include "shuffles/errors.hpp"
#include "shuffles/json_io.hpp"

namespace shuffles::fixtures {

namespace {

// The naturals in their usual order.
const std::string kIdentity = R"json({
  "label": "identity",
  "components": [
    {"domains": [{"kind": "plus_inf"}], "expr": "i0"}
  ]
}
)json";

// All evens ascending, then all odds ascending.
const std::string kEvensOdds = R"json({
  "label": "evens_odds",
  "components": [
    {"domains": [{"kind": "plus_inf"}], "expr": "2*i0"},
    {"domains": [{"kind": "plus_inf"}], "expr": "2*i0 + 1"}
  ]
}
)json";

// Three interleaved ascending chains 1,4,7,... / 2,5,8,... / 3,6,9,...
const std::string kThreeLadder = R"json({
  "label": "three_ladder",
  "components": [
    {"domains": [{"kind": "finite_prefix", "m": 3}, {"kind": "plus_inf"}],
     "expr": "3*i1 + i0 + 1"}
  ]
}
)json";

// 0, then for each power of two the odd multiples ascending, then the pure
// powers of two descending: 0 < 3 < 5 < ... < 6 < 10 < ... < 4 < 2 < 1.
const std::string kSharkovskii = R"json({
  "label": "sharkovskii",
  "components": [
    {"domains": [{"kind": "finite_prefix", "m": 1}], "expr": "0"},
    {"domains": [{"kind": "plus_inf"}, {"kind": "plus_inf"}],
     "expr": "(2*i1 + 3)*2^i0"},
    {"domains": [{"kind": "minus_inf"}], "expr": "2^(-i0)"}
  ]
}
)json";

// The reverse orientation: powers of two ascending, then odd-multiple
// blocks descending; 1 is least, 3 is greatest, 0 is not covered.
const std::string kSharkovskiiReversed = R"json({
  "label": "sharkovskii_reversed",
  "components": [
    {"domains": [{"kind": "plus_inf"}], "expr": "2^i0"},
    {"domains": [{"kind": "minus_inf", "m": -1}, {"kind": "minus_inf", "m": -1}],
     "expr": "(-2*i1 + 1)*2^(-1 - i0)"}
  ]
}
)json";

const std::array<std::pair<const char*, const std::string*>, 5> kAll = {{
    {"identity", &kIdentity},
    {"evens_odds", &kEvensOdds},
    {"three_ladder", &kThreeLadder},
    {"sharkovskii", &kSharkovskii},
    {"sharkovskii_reversed", &kSharkovskiiReversed},
}};

} // namespace

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : kAll) out.emplace_back(name);
    return out;
}

const std::string& document(const std::string& name) {
    for (const auto& [n, doc] : kAll)
        if (name == n) return *doc;
    raise(Errc::document_error, "no bundled fixture named '" + name + "'");
}

MixedShuffle load(const std::string& name) {
    return shuffle_from_json(document(name));
}

} // namespace shuffles::fixtures
