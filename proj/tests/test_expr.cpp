#include <doctest.h>

#include <random>

#include "shuffles/errors.hpp"
#include "shuffles/expr.hpp"

using namespace shuffles;
using namespace shuffles::expr;

namespace {

const std::vector<std::string> kVars{"i0", "i1"};

NodePtr p(std::string_view text) { return parse(text, kVars); }

Int ev(std::string_view text, std::vector<Int> bindings) {
    return eval(p(text), bindings);
}

// random trees for round-trip checks
NodePtr random_tree(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
    switch (pick(rng)) {
    case 0: return Node::lit(std::uniform_int_distribution<Int>(0, 9)(rng));
    case 1: {
        size_t slot = std::uniform_int_distribution<size_t>(0, 1)(rng);
        return Node::var(slot, kVars[slot]);
    }
    case 2: return Node::make(Node::Kind::add, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 3: return Node::make(Node::Kind::sub, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 4: return Node::make(Node::Kind::mul, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 5: return Node::make(Node::Kind::neg, random_tree(rng, depth - 1));
    default: return Node::make(Node::Kind::pow, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    }
}

} // namespace

TEST_CASE("parser builds the expected trees") {
    NodePtr e = p("3*i1 + i0 + 1");
    REQUIRE(e->kind == Node::Kind::add);
    CHECK(e->rhs->kind == Node::Kind::int_lit);
    CHECK(e->lhs->kind == Node::Kind::add);
    CHECK(e->lhs->lhs->kind == Node::Kind::mul);

    NodePtr pw = parse("2^i0", std::vector<std::string>{"i0"});
    REQUIRE(pw->kind == Node::Kind::pow);
    CHECK(pw->lhs->value == 2);
    CHECK(pw->rhs->name == "i0");

    NodePtr v = parse("i0", std::vector<std::string>{"i0"});
    CHECK(v->kind == Node::Kind::var);
}

TEST_CASE("operator binding: ^ over * over unary minus") {
    // -2^i0 negates the power; ^ is right-associative
    NodePtr e = p("-2^i0");
    REQUIRE(e->kind == Node::Kind::neg);
    CHECK(e->lhs->kind == Node::Kind::pow);
    NodePtr r = p("2^i0^2");
    REQUIRE(r->kind == Node::Kind::pow);
    CHECK(r->rhs->kind == Node::Kind::pow);
    NodePtr m = p("2*i0^2");
    REQUIRE(m->kind == Node::Kind::mul);
    CHECK(m->rhs->kind == Node::Kind::pow);
}

TEST_CASE("parser reports positions and unknown names") {
    try {
        (void)p("3*i1 + + 1");
        FAIL("should have thrown");
    } catch (const Error& e) {
        CHECK(e.code == Errc::syntax_error);
        CHECK(std::string(e.what()).find("position 7") != std::string::npos);
    }
    try {
        (void)p("i0 + j3");
        FAIL("should have thrown");
    } catch (const Error& e) {
        CHECK(e.code == Errc::undeclared_variable);
        CHECK(std::string(e.what()).find("j3") != std::string::npos);
    }
    CHECK_THROWS_AS((void)parse("", kVars), Error);
    CHECK_THROWS_AS((void)p("(i0"), Error);
}

TEST_CASE("evaluation on the worked segment formulas") {
    CHECK(ev("3*i1 + i0 + 1", {0, 2}) == 7);
    CHECK(ev("3*i1 + i0 + 1", {1, 3}) == 11);
    CHECK(ev("(-2*i1 + 1)*2^(-1 - i0)", {-3, -4}) == 36);
    CHECK(ev("i0", {5, 0}) == 5);
    CHECK(ev("2^i0", {10, 0}) == 1024);
    CHECK(ev("(2 + i0)^(i1 + 1)", {2, 0}) == 4);
    CHECK(ev("0^i0", {0, 0}) == 1); // 0^0 = 1
    CHECK(ev("0^i0", {3, 0}) == 0);
    CHECK(ev("i0 + (-1)^i0", {4, 0}) == 5);
    CHECK(ev("i0 + (-1)^i0", {5, 0}) == 4);
}

TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS((void)ev("2^i0", {-1, 0}), Error);
    try {
        (void)ev("2^i0", {-1, 0});
    } catch (const Error& e) {
        CHECK(e.code == Errc::negative_exponent);
    }
    try {
        (void)ev("2^i0", {90, 0});
        FAIL("should overflow");
    } catch (const Error& e) {
        CHECK(e.code == Errc::arithmetic_overflow);
    }
    try {
        (void)ev("i0*i0", {Int(1) << 40, Int(0)});
        FAIL("should overflow");
    } catch (const Error& e) {
        CHECK(e.code == Errc::arithmetic_overflow);
    }
}

TEST_CASE("rendering reparses to an identical tree") {
    std::mt19937 rng(31);
    for (int i = 0; i < 800; ++i) {
        NodePtr tree = random_tree(rng, 4);
        NodePtr back = p(to_string(tree));
        CHECK(equal(tree, back));
    }
    // and strings normalize through one render/parse cycle
    for (const char* s : {"3*i1 + i0 + 1", "2^i0", "(-2*i1 + 1)*2^(-1 - i0)",
                          "i0 + (-1)^i0", "(2 + i0)^(i1 + 1)"}) {
        NodePtr tree = p(s);
        CHECK(equal(tree, p(to_string(tree))));
    }
}

TEST_CASE("eval respects substitution") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<Int> small(-4, 4);
    for (int i = 0; i < 300; ++i) {
        NodePtr tree = random_tree(rng, 3);
        Int a = small(rng), b = small(rng);
        std::vector<NodePtr> repl{Node::lit(a), Node::lit(b)};
        Int direct = 0, substituted = 0;
        bool direct_ok = true, subst_ok = true;
        try {
            direct = eval(tree, std::vector<Int>{a, b});
        } catch (const Error&) {
            direct_ok = false;
        }
        try {
            substituted = eval(substitute(tree, repl), std::vector<Int>{});
        } catch (const Error&) {
            subst_ok = false;
        }
        REQUIRE(direct_ok == subst_ok);
        if (direct_ok) CHECK(direct == substituted);
    }
}
