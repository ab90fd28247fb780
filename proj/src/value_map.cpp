#include "shuffles/value_map.hpp"

#include "shuffles/errors.hpp"

namespace shuffles {

bool ValueMap::try_eval(std::span<const Int> idx, Int& out) const {
    try {
        out = eval(idx);
        return true;
    } catch (const Error& e) {
        if (e.code == Errc::arithmetic_overflow ||
            e.code == Errc::negative_exponent ||
            e.code == Errc::not_found_within_budget)
            return false;
        throw;
    }
}

Int TableMap::eval(std::span<const Int> idx) const {
    Int i = idx[0];
    Int pos = sign_ >= 0 ? i : -i;
    if (pos < 0)
        raise(Errc::domain_violation, "table index on the wrong side of 0");
    if (pos < static_cast<Int>(head_.size())) return head_[static_cast<size_t>(pos)];
    if (identity_tail_) return pos;
    throw Error(Errc::not_found_within_budget,
                "table value unknown beyond its head", static_cast<Int>(head_.size()));
}

bool TableMap::try_eval(std::span<const Int> idx, Int& out) const {
    Int pos = sign_ >= 0 ? idx[0] : -idx[0];
    if (pos < 0) return false;
    if (pos < static_cast<Int>(head_.size())) {
        out = head_[static_cast<size_t>(pos)];
        return true;
    }
    if (!identity_tail_) return false;
    out = pos;
    return true;
}

Int ComposedMap::eval(std::span<const Int> idx) const {
    Int v = inner_->eval(idx.subspan(split_));
    std::vector<Int> outer_idx(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(split_));
    outer_idx.push_back(eps_ >= 0 ? v : checked_neg(v));
    return outer_->eval(outer_idx);
}

bool ComposedMap::try_eval(std::span<const Int> idx, Int& out) const {
    Int v;
    if (!inner_->try_eval(idx.subspan(split_), v)) return false;
    std::vector<Int> outer_idx(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(split_));
    outer_idx.push_back(eps_ >= 0 ? v : -v);
    return outer_->try_eval(outer_idx, out);
}

Int ShiftedMap::eval(std::span<const Int> idx) const {
    Int shifted = checked_add(idx[0], shift_);
    return inner_->eval(std::span<const Int>(&shifted, 1));
}

Int OverrideMap::eval(std::span<const Int> idx) const {
    auto hit = entries_.find(idx[0]);
    if (hit != entries_.end()) return hit->second;
    return inner_->eval(idx);
}

Int NegatedMap::eval(std::span<const Int> idx) const {
    std::vector<Int> neg(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) neg[i] = checked_neg(idx[i]);
    return inner_->eval(neg);
}

} // namespace shuffles
