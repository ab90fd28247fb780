#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "shuffles/expr.hpp"
#include "shuffles/ints.hpp"

namespace shuffles {

class ValueMap;
using ValueMapPtr = std::shared_ptr<const ValueMap>;

/// Value map of a component: index tuple -> integer. Expression-backed maps
/// come from shuffle documents; the other kinds arise from composition,
/// inversion and transfer and are total only where their data reaches
/// (misses raise not_found_within_budget).
class ValueMap {
public:
    enum class Kind { expression, table, composed, shifted, overridden, negated };

    virtual ~ValueMap() = default;
    virtual Kind kind() const = 0;
    virtual size_t arity() const = 0;
    virtual Int eval(std::span<const Int> idx) const = 0;

    /// Non-throwing eval for enumeration loops: false where the map is
    /// undefined (overflow, negative exponent, past a table head).
    virtual bool try_eval(std::span<const Int> idx, Int& out) const;
};

/// Closed-form map; variable slot j is the j-th index (a trailing extra
/// variable, when declared, is bound by the caller, e.g. a family index).
class ExprMap final : public ValueMap {
public:
    ExprMap(expr::NodePtr tree, std::vector<std::string> vars)
        : tree_(std::move(tree)), vars_(std::move(vars)) {}

    Kind kind() const override { return Kind::expression; }
    size_t arity() const override { return vars_.size(); }
    Int eval(std::span<const Int> idx) const override { return expr::eval(tree_, idx); }
    bool try_eval(std::span<const Int> idx, Int& out) const override {
        return expr::try_eval(tree_, idx, out);
    }

    const expr::NodePtr& tree() const { return tree_; }
    const std::vector<std::string>& vars() const { return vars_; }

private:
    expr::NodePtr tree_;
    std::vector<std::string> vars_;
};

/// Single-index map backed by a finite head table. For sign +, index i >= 0
/// reads head[i]; for sign -, index i <= 0 reads head[-i]. Beyond the head
/// an identity tail continues with |i|, otherwise the value is unknown.
class TableMap final : public ValueMap {
public:
    TableMap(std::vector<Int> head, bool identity_tail, int sign)
        : head_(std::move(head)), identity_tail_(identity_tail), sign_(sign) {}

    Kind kind() const override { return Kind::table; }
    size_t arity() const override { return 1; }
    Int eval(std::span<const Int> idx) const override;
    bool try_eval(std::span<const Int> idx, Int& out) const override;

    const std::vector<Int>& head() const { return head_; }
    bool identity_tail() const { return identity_tail_; }
    int sign() const { return sign_; }

private:
    std::vector<Int> head_;
    bool identity_tail_;
    int sign_; // +1 or -1
};

/// outer(i_0,...,i_{split-1}, eps * inner(j_0,...)).
class ComposedMap final : public ValueMap {
public:
    ComposedMap(ValueMapPtr outer, ValueMapPtr inner, size_t split, int eps)
        : outer_(std::move(outer)), inner_(std::move(inner)), split_(split), eps_(eps) {}

    Kind kind() const override { return Kind::composed; }
    size_t arity() const override { return split_ + inner_->arity(); }
    Int eval(std::span<const Int> idx) const override;
    bool try_eval(std::span<const Int> idx, Int& out) const override;

private:
    ValueMapPtr outer_;
    ValueMapPtr inner_;
    size_t split_;
    int eps_;
};

/// Single-index map reading inner at i + shift.
class ShiftedMap final : public ValueMap {
public:
    ShiftedMap(ValueMapPtr inner, Int shift)
        : inner_(std::move(inner)), shift_(shift) {}

    Kind kind() const override { return Kind::shifted; }
    size_t arity() const override { return 1; }
    Int eval(std::span<const Int> idx) const override;

private:
    ValueMapPtr inner_;
    Int shift_;
};

/// Single-index map with a few explicit index -> value entries in front of
/// an inner map.
class OverrideMap final : public ValueMap {
public:
    OverrideMap(ValueMapPtr inner, std::map<Int, Int> entries)
        : inner_(std::move(inner)), entries_(std::move(entries)) {}

    Kind kind() const override { return Kind::overridden; }
    size_t arity() const override { return 1; }
    Int eval(std::span<const Int> idx) const override;

private:
    ValueMapPtr inner_;
    std::map<Int, Int> entries_;
};

/// inner(-i_0,...,-i_k); the involution image of maps with no closed form.
class NegatedMap final : public ValueMap {
public:
    explicit NegatedMap(ValueMapPtr inner) : inner_(std::move(inner)) {}

    Kind kind() const override { return Kind::negated; }
    size_t arity() const override { return inner_->arity(); }
    Int eval(std::span<const Int> idx) const override;

    const ValueMapPtr& inner() const { return inner_; }

private:
    ValueMapPtr inner_;
};

} // namespace shuffles
