#pragma once

#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "shuffles/shuffle.hpp"

namespace shuffles {

enum class Ordering { lt, eq, gt };

/// Lexicographic comparison of flat address tuples (t, i_1, ..., i_k):
/// the first differing position decides by integer order; a strict prefix
/// precedes any extension.
Ordering lex_compare(const Address& a, const Address& b);

/// Order queries over one presentation. Reuses a single deterministic
/// dovetail and memoizes every value it has seen, so repeated queries never
/// re-enumerate. Budgets cap the cumulative enumeration steps of this index;
/// retrying a failed query with a larger budget resumes where it stopped.
/// Queries are serialized internally and safe to call concurrently.
class AddressIndex {
public:
    explicit AddressIndex(MixedShuffle s);

    const MixedShuffle& shuffle() const { return s_; }

    /// Raises not_found_within_budget (carrying budget_used) when x has not
    /// appeared; whether x is outside the support or the budget was too
    /// small is unknowable.
    Address address_of(Int x, Int budget);

    /// Inverse of address_of: evaluates the component at the given indices.
    Int value_at(const Address& a) const;

    /// x precedes y in the induced total order (false when x == y).
    bool precedes(Int x, Int y, Int budget);

    /// Stable sort by lexicographic address order.
    std::vector<Int> sort_prefix(std::vector<Int> xs, Int budget);

    /// The next element of x's innermost segment or bench: the last index
    /// incremented by one, when that stays in its domain.
    std::optional<Int> segment_successor(Int x, Int budget);

    VerificationReport verify(Int upto, Int budget);

    Int steps_used() const;

private:
    bool pump(Int budget); // one dovetail step under mu_

    MixedShuffle s_;
    mutable std::mutex mu_;
    Dovetail dt_;
    std::unordered_map<Int, Address> first_;
    std::vector<VerificationReport::Duplicate> duplicates_;
    bool exhausted_ = false;
};

/// All dovetail visits with round <= radius, in enumeration order (including
/// failed evaluations); the shared currency of pointwise equality tests.
std::vector<Dovetail::Visit> dovetail_ball(const MixedShuffle& s, Int radius);

// Spec-shaped free functions over a throwaway index.
Address address_of(const MixedShuffle& s, Int x, Int budget);
Int value_at(const MixedShuffle& s, const Address& a);
bool precedes(const MixedShuffle& s, Int x, Int y, Int budget);
std::vector<Int> sort_prefix(const MixedShuffle& s, std::vector<Int> xs, Int budget);
std::optional<Int> segment_successor(const MixedShuffle& s, Int x, Int budget);

} // namespace shuffles
