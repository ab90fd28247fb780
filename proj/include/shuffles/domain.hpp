#pragma once

#include <algorithm>
#include <utility>

#include "shuffles/ints.hpp"

namespace shuffles {

/// One index range of a component. `finite_prefix(m)` is {0,...,m-1},
/// `finite_range(n,m)` is {n,...,m}, `plus_inf(n)` is {n,n+1,...} and
/// `minus_inf(m)` is {...,m-1,m}. The infinite kinds default to anchor 0,
/// i.e. the naturals and their negation.
struct IndexDomain {
    enum class Kind { finite_prefix, finite_range, plus_inf, minus_inf };

    Kind kind = Kind::plus_inf;
    Int m = 0; // finite_prefix: size; finite_range / minus_inf: upper end
    Int n = 0; // finite_range / plus_inf: lower end

    static IndexDomain finite_prefix(Int m) {
        if (m < 1) raise(Errc::empty_domain, "finite prefix needs m >= 1");
        return {Kind::finite_prefix, m, 0};
    }
    static IndexDomain finite_range(Int n, Int m) {
        if (n > m) raise(Errc::empty_domain, "finite range needs n <= m");
        return {Kind::finite_range, m, n};
    }
    static IndexDomain plus_inf(Int from = 0) { return {Kind::plus_inf, 0, from}; }
    static IndexDomain minus_inf(Int upto = 0) { return {Kind::minus_inf, upto, 0}; }

    bool is_infinite() const {
        return kind == Kind::plus_inf || kind == Kind::minus_inf;
    }

    /// +1 / -1 for the infinite kinds, 0 for finite ones.
    int orientation() const {
        if (kind == Kind::plus_inf) return +1;
        if (kind == Kind::minus_inf) return -1;
        return 0;
    }

    bool contains(Int i) const {
        switch (kind) {
        case Kind::finite_prefix: return 0 <= i && i < m;
        case Kind::finite_range: return n <= i && i <= m;
        case Kind::plus_inf: return i >= n;
        case Kind::minus_inf: return i <= m;
        }
        return false;
    }

    Int finite_size() const {
        if (kind == Kind::finite_prefix) return m;
        if (kind == Kind::finite_range) return m - n + 1;
        raise(Errc::domain_violation, "infinite domain has no size");
    }

    /// Inclusive iteration bounds within the ball |i| <= r (empty if lo > hi).
    std::pair<Int, Int> ball_bounds(Int r) const {
        switch (kind) {
        case Kind::finite_prefix: return {0, std::min(m - 1, r)};
        case Kind::finite_range: return {std::max(n, -r), std::min(m, r)};
        case Kind::plus_inf: return {std::max(n, -r), r};
        case Kind::minus_inf: return {-r, std::min(m, r)};
        }
        return {1, 0};
    }

    /// The involution image: indices negated.
    IndexDomain negated() const {
        switch (kind) {
        case Kind::finite_prefix: return finite_range(-m + 1, 0);
        case Kind::finite_range: return finite_range(-m, -n);
        case Kind::plus_inf: return minus_inf(-n);
        case Kind::minus_inf: return plus_inf(-m);
        }
        return *this;
    }

    bool operator==(const IndexDomain&) const = default;
};

} // namespace shuffles
