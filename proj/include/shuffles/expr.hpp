#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shuffles/ints.hpp"

namespace shuffles::expr {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Integer expression tree over declared index variables.
struct Node {
    enum class Kind { int_lit, var, add, sub, mul, neg, pow };

    Kind kind;
    Int value = 0;        // int_lit
    size_t slot = 0;      // var: position in the declared variable list
    std::string name;     // var: declared spelling
    NodePtr lhs, rhs;     // binary nodes; neg uses lhs only

    static NodePtr lit(Int v);
    static NodePtr var(size_t slot, std::string name);
    static NodePtr make(Kind k, NodePtr l, NodePtr r = nullptr);
};

bool equal(const NodePtr& a, const NodePtr& b);

/// Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := INT | VAR | '-' factor | '(' expr ')' | factor '^' factor,
/// with '^' right-associative and binding tighter than '*' and unary '-'.
/// Raises syntax_error (with position) and undeclared_variable.
NodePtr parse(std::string_view text, std::span<const std::string> allowed_vars);

/// Exact evaluation; bindings[slot] supplies each variable.
/// Raises negative_exponent and arithmetic_overflow.
Int eval(const NodePtr& e, std::span<const Int> bindings);

/// Non-throwing twin of eval for enumeration loops: false when the value
/// has a negative exponent or leaves the 64-bit range.
bool try_eval(const NodePtr& e, std::span<const Int> bindings, Int& out);

/// Minimal-parentheses rendering; reparses to an identical tree.
std::string to_string(const NodePtr& e);

/// Replaces each variable by replacements[slot] (shared, not copied).
NodePtr substitute(const NodePtr& e, std::span<const NodePtr> replacements);

/// Remaps variable slots/names, e.g. when splicing one expression into
/// another's variable list.
NodePtr rename_vars(const NodePtr& e, size_t slot_offset,
                    std::span<const std::string> new_names);

} // namespace shuffles::expr
