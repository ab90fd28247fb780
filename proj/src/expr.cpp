#include "shuffles/expr.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>

#include "shuffles/errors.hpp"

namespace shuffles::expr {

NodePtr Node::lit(Int v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::int_lit;
    n->value = v;
    return n;
}

NodePtr Node::var(size_t slot, std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::var;
    n->slot = slot;
    n->name = std::move(name);
    return n;
}

NodePtr Node::make(Kind k, NodePtr l, NodePtr r) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

bool equal(const NodePtr& a, const NodePtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
    case Node::Kind::int_lit: return a->value == b->value;
    case Node::Kind::var: return a->slot == b->slot && a->name == b->name;
    case Node::Kind::neg: return equal(a->lhs, b->lhs);
    default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> vars)
        : text_(text), vars_(vars) {}

    NodePtr run() {
        NodePtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        raise(Errc::syntax_error,
              "expression syntax error at position " + std::to_string(pos_) +
                  ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    int peek() {
        skip_ws();
        return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
    }

    NodePtr parse_expr() {
        NodePtr e = parse_term();
        for (;;) {
            if (eat('+'))
                e = Node::make(Node::Kind::add, e, parse_term());
            else if (eat('-'))
                e = Node::make(Node::Kind::sub, e, parse_term());
            else
                return e;
        }
    }

    NodePtr parse_term() {
        NodePtr e = parse_factor();
        while (eat('*')) e = Node::make(Node::Kind::mul, e, parse_factor());
        return e;
    }

    // factor := '-' factor | primary ('^' factor)?   ('^' right-associative,
    // tighter than '*' and unary '-')
    NodePtr parse_factor() {
        if (eat('-')) return Node::make(Node::Kind::neg, parse_factor());
        NodePtr base = parse_primary();
        if (eat('^')) return Node::make(Node::Kind::pow, base, parse_factor());
        return base;
    }

    NodePtr parse_primary() {
        int c = peek();
        if (c == '(') {
            eat('(');
            NodePtr e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c >= '0' && c <= '9') return parse_number();
        if (std::isalpha(c) || c == '_') return parse_variable();
        fail("expected a number, variable or '('");
    }

    NodePtr parse_number() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        errno = 0;
        Int v = std::strtoll(std::string(text_.substr(start, pos_ - start)).c_str(),
                             nullptr, 10);
        if (errno == ERANGE)
            raise(Errc::arithmetic_overflow,
                  "integer literal out of range at position " + std::to_string(start));
        return Node::lit(v);
    }

    NodePtr parse_variable() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        for (size_t slot = 0; slot < vars_.size(); ++slot)
            if (vars_[slot] == name) return Node::var(slot, name);
        raise(Errc::undeclared_variable,
              "undeclared variable '" + name + "' at position " +
                  std::to_string(start));
    }

    std::string_view text_;
    std::span<const std::string> vars_;
    size_t pos_ = 0;
};

} // namespace

NodePtr parse(std::string_view text, std::span<const std::string> allowed_vars) {
    if (text.empty()) raise(Errc::syntax_error, "empty expression");
    return Parser(text, allowed_vars).run();
}

Int eval(const NodePtr& e, std::span<const Int> bindings) {
    switch (e->kind) {
    case Node::Kind::int_lit: return e->value;
    case Node::Kind::var:
        if (e->slot >= bindings.size())
            raise(Errc::undeclared_variable,
                  "no binding for variable '" + e->name + "'");
        return bindings[e->slot];
    case Node::Kind::add: return checked_add(eval(e->lhs, bindings), eval(e->rhs, bindings));
    case Node::Kind::sub: return checked_sub(eval(e->lhs, bindings), eval(e->rhs, bindings));
    case Node::Kind::mul: return checked_mul(eval(e->lhs, bindings), eval(e->rhs, bindings));
    case Node::Kind::neg: return checked_neg(eval(e->lhs, bindings));
    case Node::Kind::pow: return checked_pow(eval(e->lhs, bindings), eval(e->rhs, bindings));
    }
    raise(Errc::syntax_error, "corrupt expression node");
}

bool try_eval(const NodePtr& e, std::span<const Int> bindings, Int& out) {
    Int l, r;
    switch (e->kind) {
    case Node::Kind::int_lit:
        out = e->value;
        return true;
    case Node::Kind::var:
        if (e->slot >= bindings.size())
            raise(Errc::undeclared_variable,
                  "no binding for variable '" + e->name + "'");
        out = bindings[e->slot];
        return true;
    case Node::Kind::add:
        return try_eval(e->lhs, bindings, l) && try_eval(e->rhs, bindings, r) &&
               !__builtin_add_overflow(l, r, &out);
    case Node::Kind::sub:
        return try_eval(e->lhs, bindings, l) && try_eval(e->rhs, bindings, r) &&
               !__builtin_sub_overflow(l, r, &out);
    case Node::Kind::mul:
        return try_eval(e->lhs, bindings, l) && try_eval(e->rhs, bindings, r) &&
               !__builtin_mul_overflow(l, r, &out);
    case Node::Kind::neg:
        return try_eval(e->lhs, bindings, l) && !__builtin_sub_overflow(Int(0), l, &out);
    case Node::Kind::pow: {
        if (!try_eval(e->lhs, bindings, l) || !try_eval(e->rhs, bindings, r))
            return false;
        if (r < 0) return false;
        Int result = 1, acc = l;
        while (r > 0) {
            if ((r & 1) && __builtin_mul_overflow(result, acc, &result)) return false;
            r >>= 1;
            if (r > 0 && __builtin_mul_overflow(acc, acc, &acc)) return false;
        }
        out = result;
        return true;
    }
    }
    raise(Errc::syntax_error, "corrupt expression node");
}

namespace {

// Precedence bands: additive 1, multiplicative 2, unary minus 3, power 4.
int precedence(Node::Kind k) {
    switch (k) {
    case Node::Kind::add:
    case Node::Kind::sub: return 1;
    case Node::Kind::mul: return 2;
    case Node::Kind::neg: return 3;
    case Node::Kind::pow: return 4;
    default: return 5;
    }
}

void render(const NodePtr& e, int min_prec, std::string& out) {
    int prec = precedence(e->kind);
    bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (e->kind) {
    case Node::Kind::int_lit:
        out += std::to_string(e->value);
        break;
    case Node::Kind::var:
        out += e->name;
        break;
    case Node::Kind::add:
        render(e->lhs, 1, out);
        out += " + ";
        render(e->rhs, 2, out);
        break;
    case Node::Kind::sub:
        render(e->lhs, 1, out);
        out += " - ";
        render(e->rhs, 2, out);
        break;
    case Node::Kind::mul:
        render(e->lhs, 2, out);
        out += "*";
        render(e->rhs, 3, out);
        break;
    case Node::Kind::neg:
        out += '-';
        render(e->lhs, 3, out);
        break;
    case Node::Kind::pow:
        render(e->lhs, 5, out); // left operand of '^' must be atomic
        out += '^';
        render(e->rhs, 4, out);
        break;
    }
    if (parens) out += ')';
}

} // namespace

std::string to_string(const NodePtr& e) {
    std::string out;
    render(e, 0, out);
    return out;
}

NodePtr substitute(const NodePtr& e, std::span<const NodePtr> replacements) {
    switch (e->kind) {
    case Node::Kind::int_lit: return e;
    case Node::Kind::var:
        if (e->slot >= replacements.size() || !replacements[e->slot])
            raise(Errc::undeclared_variable,
                  "no replacement for variable '" + e->name + "'");
        return replacements[e->slot];
    case Node::Kind::neg: {
        NodePtr l = substitute(e->lhs, replacements);
        return l == e->lhs ? e : Node::make(Node::Kind::neg, l);
    }
    default: {
        NodePtr l = substitute(e->lhs, replacements);
        NodePtr r = substitute(e->rhs, replacements);
        return l == e->lhs && r == e->rhs ? e : Node::make(e->kind, l, r);
    }
    }
}

NodePtr rename_vars(const NodePtr& e, size_t slot_offset,
                    std::span<const std::string> new_names) {
    switch (e->kind) {
    case Node::Kind::int_lit: return e;
    case Node::Kind::var: {
        size_t slot = e->slot + slot_offset;
        if (slot >= new_names.size())
            raise(Errc::undeclared_variable, "variable slot out of range");
        return Node::var(slot, new_names[slot]);
    }
    case Node::Kind::neg:
        return Node::make(Node::Kind::neg, rename_vars(e->lhs, slot_offset, new_names));
    default:
        return Node::make(e->kind, rename_vars(e->lhs, slot_offset, new_names),
                          rename_vars(e->rhs, slot_offset, new_names));
    }
}

} // namespace shuffles::expr
