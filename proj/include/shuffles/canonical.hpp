#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shuffles/shuffle.hpp"

namespace shuffles::canonical {

enum class PartKind { ladder, snake, bench };

struct PartType {
    PartKind kind = PartKind::bench;
    std::optional<Int> length; // bench only; nullopt = unknown

    static PartType ladder() { return {PartKind::ladder, std::nullopt}; }
    static PartType snake() { return {PartKind::snake, std::nullopt}; }
    static PartType bench(std::optional<Int> len) { return {PartKind::bench, len}; }

    bool operator==(const PartType&) const = default;
};

/// A run of equal parts. Exactly one of the repetition forms applies:
/// `count` copies, omega-many ascending copies, or omega*-many descending
/// copies (the latter has a last part but no first).
struct PartBlock {
    PartType type;
    Int count = 1;
    bool omega = false;
    bool omega_star = false;

    bool operator==(const PartBlock&) const = default;
};

struct PartSequence {
    std::vector<PartBlock> blocks;

    bool operator==(const PartSequence&) const = default;
};

std::string to_string(const PartSequence& ps);

/// Expands each component into its innermost parts: a finite inner domain
/// yields benches of that length, an infinite one ladders or snakes; the
/// outer domains fix the repetition (a family repeats omega-many times).
PartSequence part_type_sequence(const MixedShuffle& s);

struct CanonicalResult {
    PartSequence sequence;
    bool unique; // no snake immediately followed by a ladder remains
};

/// Bench-minimizing normal form: adjacent benches merge, a bench after a
/// snake (or before a ladder) is absorbed into the segment, and an infinite
/// run of benches is itself a segment.
CanonicalResult canonicalize(PartSequence ps);

/// Order type of a part sequence; agrees with the domain-tuple fold.
ordinal::OrderType order_type(const PartSequence& ps);

/// Equivalent presentation in which the first n elements of the ladder at
/// pair_index + 1 move onto the top of the snake at pair_index. Both parts
/// must be whole single-segment components.
MixedShuffle transfer(const MixedShuffle& s, size_t pair_index, Int n, Int budget);

/// Canonicalized block diagram, e.g. "•-o •-o ... •-o ... o-•". Adjacent
/// single ladder+snake renders "•-o-•", snake+ladder "o-o".
std::string diagram(const MixedShuffle& s);
std::string diagram_dot(const MixedShuffle& s);

} // namespace shuffles::canonical
