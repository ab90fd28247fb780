#pragma once

#include <span>
#include <string>
#include <vector>

#include "shuffles/shuffle.hpp"

namespace shuffles::algebra {

/// Index negation: every domain is negated, every value map reads negated
/// indices, and the (finite) component list is reversed, so the induced
/// order on the naturals is exactly reversed. Sign flips, degrees persist.
/// Presentations with an omega-family are not involutible here (the
/// reversed component list would descend from infinity).
MixedShuffle involution(const MixedShuffle& s);

/// Substitution composition: every innermost segment of S is replaced by a
/// copy of U. S and U must be single-component, bench-free presentations of
/// equal sign; the result's domains are S's minus the last, then all of
/// U's, and its value is s(..., eps * u(...)).
MixedShuffle compose(const MixedShuffle& S, const MixedShuffle& U);

/// The naturals in their usual order (+) or its reversal (-).
MixedShuffle identity_element(ordinal::Sign eps);

/// Single-segment presentations carrying a bijection of the naturals; the
/// group elements of the composition group.
struct I1Element {
    MixedShuffle shuffle;
    ordinal::Sign sign;

    /// Validates: one component, one infinite domain, anchored at 0.
    static I1Element wrap(MixedShuffle s);

    /// The bijection: value at index eps*x.
    Int apply(Int x) const;
};

/// Head = the permutation's images, identity beyond; for eps = -, the
/// mirrored construction under the involution.
I1Element from_finite_permutation(std::span<const Int> perm, ordinal::Sign eps);

/// Table-backed inverse bijection, valid through `upto` (exact and
/// unbounded when S is itself a permutation head with identity tail).
/// S must verify injective and covering up to `upto`.
I1Element invert_i1(const I1Element& s, Int upto, Int budget);

struct GroupReport {
    bool closure_ok = true;
    bool associativity_ok = true;
    bool identity_ok = true;
    bool inverses_ok = true;
    std::vector<std::string> failures;

    bool passed() const {
        return closure_ok && associativity_ok && identity_ok && inverses_ok;
    }
};

/// Checks the group axioms pointwise on 0..upto over the given elements;
/// failures become report content, never errors.
GroupReport group_check(const std::vector<I1Element>& elements, Int upto,
                        Int budget);

} // namespace shuffles::algebra
