#include "shuffles/address.hpp"

#include <algorithm>

#include "shuffles/errors.hpp"

namespace shuffles {

Ordering lex_compare(const Address& a, const Address& b) {
    if (a.t != b.t) return a.t < b.t ? Ordering::lt : Ordering::gt;
    size_t n = std::min(a.indices.size(), b.indices.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.indices[i] != b.indices[i])
            return a.indices[i] < b.indices[i] ? Ordering::lt : Ordering::gt;
    }
    if (a.indices.size() != b.indices.size())
        return a.indices.size() < b.indices.size() ? Ordering::lt : Ordering::gt;
    return Ordering::eq;
}

namespace {
MixedShuffle validated(MixedShuffle s) {
    validate(s);
    return s;
}
} // namespace

AddressIndex::AddressIndex(MixedShuffle s)
    : s_(validated(std::move(s))), dt_(s_) {}

Int AddressIndex::steps_used() const {
    std::scoped_lock lk(mu_);
    return dt_.steps();
}

// One enumeration step; false when the budget is spent or the presentation
// is exhausted. Caller holds mu_.
bool AddressIndex::pump(Int budget) {
    if (exhausted_ || dt_.steps() >= budget) return false;
    dt_.set_step_limit(budget);
    Dovetail::Visit v;
    if (!dt_.next(v)) {
        exhausted_ = dt_.exhausted();
        return false;
    }
    if (v.value && *v.value >= 0) {
        auto [it, inserted] = first_.try_emplace(*v.value, v.address);
        if (!inserted) duplicates_.push_back({*v.value, it->second, v.address});
    }
    return true;
}

Address AddressIndex::address_of(Int x, Int budget) {
    std::scoped_lock lk(mu_);
    for (;;) {
        auto hit = first_.find(x);
        if (hit != first_.end()) return hit->second;
        if (!pump(budget)) break;
    }
    throw Error(Errc::not_found_within_budget,
                "no address for " + std::to_string(x) + " within " +
                    std::to_string(dt_.steps()) + " steps (value outside the "
                    "support or budget too small)",
                dt_.steps());
}

Int AddressIndex::value_at(const Address& a) const {
    if (!s_.component_exists(a.t))
        raise(Errc::domain_violation, "no component " + std::to_string(a.t));
    const UniformComponent& c = s_.component_at(a.t);
    if (a.indices.size() != c.domains.size())
        raise(Errc::domain_violation, "address arity mismatch");
    for (size_t j = 0; j < c.domains.size(); ++j)
        if (!c.domains[j].contains(a.indices[j]))
            raise(Errc::domain_violation,
                  "index " + std::to_string(a.indices[j]) +
                      " outside domain " + std::to_string(j));
    std::vector<Int> bindings = a.indices;
    if (c.is_family) bindings.push_back(a.t);
    return c.value->eval(bindings);
}

bool AddressIndex::precedes(Int x, Int y, Int budget) {
    if (x == y) return false;
    return lex_compare(address_of(x, budget), address_of(y, budget)) == Ordering::lt;
}

std::vector<Int> AddressIndex::sort_prefix(std::vector<Int> xs, Int budget) {
    std::vector<std::pair<Address, Int>> keyed;
    keyed.reserve(xs.size());
    for (Int x : xs) keyed.emplace_back(address_of(x, budget), x);
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        return lex_compare(a.first, b.first) == Ordering::lt;
    });
    for (size_t i = 0; i < keyed.size(); ++i) xs[i] = keyed[i].second;
    return xs;
}

std::optional<Int> AddressIndex::segment_successor(Int x, Int budget) {
    Address a = address_of(x, budget);
    const UniformComponent& c = s_.component_at(a.t);
    Address next = a;
    ++next.indices.back();
    if (!c.domains.back().contains(next.indices.back())) return std::nullopt;
    return value_at(next);
}

VerificationReport AddressIndex::verify(Int upto, Int budget) {
    return shuffles::verify(s_, upto, budget);
}

std::vector<Dovetail::Visit> dovetail_ball(const MixedShuffle& s, Int radius) {
    std::vector<Dovetail::Visit> out;
    Dovetail dt(s);
    dt.set_round_limit(radius);
    Dovetail::Visit v;
    while (dt.next(v)) out.push_back(v);
    return out;
}

Address address_of(const MixedShuffle& s, Int x, Int budget) {
    return AddressIndex(s).address_of(x, budget);
}

Int value_at(const MixedShuffle& s, const Address& a) {
    return AddressIndex(s).value_at(a);
}

bool precedes(const MixedShuffle& s, Int x, Int y, Int budget) {
    return AddressIndex(s).precedes(x, y, budget);
}

std::vector<Int> sort_prefix(const MixedShuffle& s, std::vector<Int> xs, Int budget) {
    return AddressIndex(s).sort_prefix(std::move(xs), budget);
}

std::optional<Int> segment_successor(const MixedShuffle& s, Int x, Int budget) {
    return AddressIndex(s).segment_successor(x, budget);
}

} // namespace shuffles
