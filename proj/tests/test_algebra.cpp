#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "shuffles/address.hpp"
#include "shuffles/algebra.hpp"
#include "shuffles/errors.hpp"
#include "shuffles/fixtures.hpp"
#include "shuffles/json_io.hpp"

using namespace shuffles;
using namespace shuffles::algebra;
using ordinal::Sign;

namespace {

constexpr Int kBudget = 1'000'000;

MixedShuffle doc(const char* text) { return shuffle_from_json(text); }

const char* kEvensU2 = R"json({
  "label": "E",
  "components": [
    {"domains": [{"kind": "finite_prefix", "m": 2}, {"kind": "plus_inf"}],
     "expr": "2*i1 + i0"}
  ]
})json";

// the adjacent swap (1,0,3,2,5,4,...) in closed form
const char* kSwap = R"json({
  "label": "swap",
  "components": [
    {"domains": [{"kind": "plus_inf"}], "expr": "i0 + (-1)^i0"}
  ]
})json";

// positive Sharkovskii-style block of degree 3
const char* kU3Pos = R"json({
  "label": "u3pos",
  "components": [
    {"domains": [{"kind": "plus_inf"}, {"kind": "plus_inf"}],
     "expr": "(2*i1 + 1)*2^i0"}
  ]
})json";

bool pointwise_equal(const MixedShuffle& a, const MixedShuffle& b, Int radius) {
    auto va = dovetail_ball(a, radius);
    auto vb = dovetail_ball(b, radius);
    if (va.size() != vb.size()) return false;
    for (size_t i = 0; i < va.size(); ++i) {
        if (!(va[i].address == vb[i].address)) return false;
        if (va[i].value != vb[i].value) return false;
    }
    return true;
}

} // namespace

TEST_CASE("involution of the 3-ladder is the worked 3-snake") {
    MixedShuffle star = involution(fixtures::load("three_ladder"));
    AddressIndex index(star);
    CHECK(index.value_at(Address{0, {0, 0}}) == 1);
    CHECK(index.value_at(Address{0, {0, -1}}) == 4);
    CHECK(index.value_at(Address{0, {-1, 0}}) == 2);
    CHECK(index.value_at(Address{0, {-1, -1}}) == 5);
    CHECK(star.components[0].orientation == -1);
    CHECK(star.components[0].strict_degree() == 2);
    // domains negated: [3] -> {-2,...,0}, [+inf] -> [-inf]
    CHECK(star.components[0].domains[0] == IndexDomain::finite_range(-2, 0));
    CHECK(star.components[0].domains[1] == IndexDomain::minus_inf());
}

TEST_CASE("involution of the identity is the reversed naturals") {
    MixedShuffle rev = involution(fixtures::load("identity"));
    AddressIndex index(rev);
    for (Int k = 0; k <= 10; ++k) CHECK(index.value_at(Address{0, {-k}}) == k);
}

TEST_CASE("involution is an involution, pointwise on a dovetail ball") {
    for (const std::string& name : fixtures::names()) {
        MixedShuffle s = fixtures::load(name);
        CHECK(pointwise_equal(s, involution(involution(s)), 5));
    }
}

TEST_CASE("involution flips signs and preserves degrees, reversed") {
    MixedShuffle s = fixtures::load("sharkovskii_reversed");
    MixedShuffle star = involution(s);
    REQUIRE(star.components.size() == s.components.size());
    size_t m = s.components.size();
    for (size_t t = 0; t < m; ++t) {
        const UniformComponent& before = s.components[t];
        const UniformComponent& after = star.components[m - 1 - t];
        CHECK(after.orientation == -before.orientation);
        CHECK(after.strict_degree() == before.strict_degree());
    }
}

TEST_CASE("involution reverses the induced order") {
    for (const std::string& name : fixtures::names()) {
        MixedShuffle s = fixtures::load(name);
        AddressIndex fwd(s);
        AddressIndex bwd(involution(s));
        Int lo = name == "sharkovskii_reversed" || name == "three_ladder" ? 1 : 0;
        for (Int x = lo; x <= lo + 40; ++x)
            for (Int y = lo; y <= lo + 40; ++y) {
                if (x == y) continue;
                CHECK(fwd.precedes(x, y, kBudget) == bwd.precedes(y, x, kBudget));
            }
    }
}

TEST_CASE("involuting the reversed fixture recovers the direct order") {
    AddressIndex direct(fixtures::load("sharkovskii"));
    AddressIndex via(involution(fixtures::load("sharkovskii_reversed")));
    for (Int x = 1; x <= 60; ++x)
        for (Int y = 1; y <= 60; ++y) {
            if (x == y) continue;
            CHECK(direct.precedes(x, y, kBudget) == via.precedes(x, y, kBudget));
        }
}

TEST_CASE("involution rejects omega-families") {
    MixedShuffle family = doc(R"json({"components": [],
        "omega_family": {"domains": [{"kind": "plus_inf"}],
                         "expr": "(2*i0 + 3)*2^t"}})json");
    CHECK_THROWS_AS((void)involution(family), Error);
}

TEST_CASE("composition reproduces the worked value table") {
    MixedShuffle r = compose(doc(kSwap), doc(kEvensU2));
    AddressIndex index(r);
    CHECK(index.value_at(Address{0, {0, 0}}) == 1);
    CHECK(index.value_at(Address{0, {0, 1}}) == 3);
    CHECK(index.value_at(Address{0, {1, 0}}) == 0);
    CHECK(index.value_at(Address{0, {1, 1}}) == 2);
    // R = ((1,3,5,...),(0,2,4,...)): still covers the naturals injectively
    CHECK(verify(r, 200, 10'000).ok());
    CHECK(ordinal::to_string(order_type(r)) == "w*2");

    // V = E o S has the recomputed first block (2,0,6,4,...)
    MixedShuffle v = compose(doc(kEvensU2), doc(kSwap));
    AddressIndex vi(v);
    CHECK(vi.value_at(Address{0, {0, 0}}) == 2);
    CHECK(vi.value_at(Address{0, {0, 1}}) == 0);
    CHECK(vi.value_at(Address{0, {0, 2}}) == 6);
    CHECK(vi.value_at(Address{0, {0, 3}}) == 4);
    CHECK(verify(v, 200, 10'000).ok());
}

TEST_CASE("composition with the identity is the identity law") {
    MixedShuffle id = identity_element(Sign::plus);
    for (const char* text : {kSwap, kEvensU2, kU3Pos}) {
        MixedShuffle s = doc(text);
        CHECK(pointwise_equal(compose(s, id), s, 5));
        // id o S keeps S's domains and values
        CHECK(pointwise_equal(compose(id, s), s, 5));
    }
}

TEST_CASE("composition order types follow the domain fold") {
    MixedShuffle e = doc(kEvensU2);
    MixedShuffle s3 = doc(kU3Pos);
    CHECK(ordinal::to_string(order_type(s3)) == "w^2");
    CHECK(ordinal::to_string(order_type(compose(s3, e))) == "w^2");
    CHECK(ordinal::to_string(order_type(compose(e, s3))) == "w^2*2");
    // closure leaves the uniform family: the result is generalized
    CHECK(compose(s3, e).components[0].shape == Shape::generalized);
    CHECK(component_degree_string(compose(s3, e).components[0]) == "(+inf,2,+inf)");
    // sign is inherited from both factors
    CHECK(compose(s3, e).components[0].orientation == +1);
    MixedShuffle minus_pair = compose(identity_element(Sign::minus),
                                      identity_element(Sign::minus));
    CHECK(minus_pair.components[0].orientation == -1);
}

TEST_CASE("composition guards its preconditions") {
    MixedShuffle plus = doc(kSwap);
    MixedShuffle minus = identity_element(Sign::minus);
    CHECK_THROWS_AS((void)compose(plus, minus), Error);
    try {
        (void)compose(plus, minus);
    } catch (const Error& e) {
        CHECK(e.code == Errc::sign_mismatch);
    }
    MixedShuffle bench = doc(R"json({"components": [
        {"domains": [{"kind": "finite_prefix", "m": 3}], "expr": "i0"}]})json");
    try {
        (void)compose(plus, bench);
        FAIL("bench must be rejected");
    } catch (const Error& e) {
        CHECK(e.code == Errc::bench_present);
    }
    try {
        (void)compose(fixtures::load("evens_odds"), plus);
        FAIL("multi-component must be rejected");
    } catch (const Error& e) {
        CHECK(e.code == Errc::multi_component_unsupported);
    }
}

TEST_CASE("identity elements act as expected on both signs") {
    MixedShuffle plus = identity_element(Sign::plus);
    AddressIndex pi(plus);
    for (Int k = 0; k <= 10; ++k) CHECK(pi.value_at(Address{0, {k}}) == k);
    MixedShuffle minus = identity_element(Sign::minus);
    AddressIndex mi(minus);
    for (Int k = 0; k <= 10; ++k) CHECK(mi.value_at(Address{0, {-k}}) == k);
    CHECK(pointwise_equal(compose(plus, plus), plus, 6));
    CHECK(pointwise_equal(compose(minus, minus), minus, 6));
}

TEST_CASE("finite permutations embed as identity-tailed tables") {
    I1Element swap = from_finite_permutation(std::vector<Int>{1, 0}, Sign::plus);
    CHECK(swap.apply(0) == 1);
    CHECK(swap.apply(1) == 0);
    CHECK(swap.apply(2) == 2);
    CHECK(swap.apply(9) == 9);

    I1Element single = from_finite_permutation(std::vector<Int>{0}, Sign::plus);
    for (Int x = 0; x <= 20; ++x)
        CHECK(single.apply(x) == I1Element::wrap(identity_element(Sign::plus)).apply(x));

    CHECK_THROWS_AS((void)from_finite_permutation(std::vector<Int>{1, 1}, Sign::plus),
                    Error);
    CHECK_THROWS_AS((void)from_finite_permutation(std::vector<Int>{2, 0}, Sign::plus),
                    Error);
}

TEST_CASE("the finite-permutation embedding is a homomorphism") {
    std::mt19937 rng(47);
    for (int round = 0; round < 100; ++round) {
        size_t n = 1 + rng() % 8, m = 1 + rng() % 8;
        std::vector<Int> pi(n), rho(m);
        std::iota(pi.begin(), pi.end(), 0);
        std::iota(rho.begin(), rho.end(), 0);
        std::shuffle(pi.begin(), pi.end(), rng);
        std::shuffle(rho.begin(), rho.end(), rng);

        I1Element spi = from_finite_permutation(pi, Sign::plus);
        I1Element srho = from_finite_permutation(rho, Sign::plus);
        I1Element composed = I1Element::wrap(compose(spi.shuffle, srho.shuffle));

        size_t y = std::max(n, m);
        std::vector<Int> gamma(y);
        for (size_t i = 0; i < y; ++i) {
            Int r = i < m ? rho[i] : static_cast<Int>(i);
            gamma[i] = r < static_cast<Int>(n) ? pi[static_cast<size_t>(r)] : r;
        }
        I1Element direct = from_finite_permutation(gamma, Sign::plus);
        for (Int x = 0; x <= static_cast<Int>(y) + 10; ++x)
            CHECK(composed.apply(x) == direct.apply(x));
    }
}

TEST_CASE("inversion produces the inverse bijection") {
    I1Element swap = I1Element::wrap(doc(kSwap));
    I1Element inv = invert_i1(swap, 100, kBudget);
    for (Int x = 0; x <= 99; ++x) CHECK(inv.apply(swap.apply(x)) == x);
    // the adjacent swap is its own inverse
    for (Int x = 0; x <= 100; ++x) CHECK(inv.apply(x) == swap.apply(x));

    I1Element id = I1Element::wrap(identity_element(Sign::plus));
    I1Element id_inv = invert_i1(id, 50, kBudget);
    for (Int x = 0; x <= 50; ++x) CHECK(id_inv.apply(x) == x);

    // permutation heads invert exactly, with the identity tail intact
    I1Element rot = from_finite_permutation(std::vector<Int>{1, 2, 0}, Sign::plus);
    I1Element rot_inv = invert_i1(rot, 10, kBudget);
    CHECK(rot_inv.apply(1) == 0);
    CHECK(rot_inv.apply(2) == 1);
    CHECK(rot_inv.apply(0) == 2);
    CHECK(rot_inv.apply(1000) == 1000);

    // a non-covering element cannot be inverted
    I1Element doubling = I1Element::wrap(doc(R"json({"components": [
        {"domains": [{"kind": "plus_inf"}], "expr": "2*i0"}]})json"));
    try {
        (void)invert_i1(doubling, 50, kBudget);
        FAIL("unverified element must be rejected");
    } catch (const Error& e) {
        CHECK(e.code == Errc::not_verified);
    }
    // and so can presentations that are not single segments at all
    CHECK_THROWS_AS((void)I1Element::wrap(fixtures::load("three_ladder")), Error);
}

TEST_CASE("conjugation by the involution is a group isomorphism") {
    std::mt19937 rng(53);
    for (int round = 0; round < 20; ++round) {
        std::vector<Int> pi(6), rho(6);
        std::iota(pi.begin(), pi.end(), 0);
        std::iota(rho.begin(), rho.end(), 0);
        std::shuffle(pi.begin(), pi.end(), rng);
        std::shuffle(rho.begin(), rho.end(), rng);
        MixedShuffle a = from_finite_permutation(pi, Sign::plus).shuffle;
        MixedShuffle b = from_finite_permutation(rho, Sign::plus).shuffle;
        I1Element lhs = I1Element::wrap(involution(compose(a, b)));
        I1Element rhs = I1Element::wrap(compose(involution(a), involution(b)));
        for (Int x = 0; x <= 40; ++x) CHECK(lhs.apply(x) == rhs.apply(x));
        CHECK(lhs.sign == Sign::minus);
    }
}

TEST_CASE("group axioms hold for a small table-backed family") {
    std::vector<I1Element> family;
    family.push_back(I1Element::wrap(identity_element(Sign::plus)));
    family.push_back(from_finite_permutation(std::vector<Int>{1, 0}, Sign::plus));
    family.push_back(from_finite_permutation(std::vector<Int>{1, 2, 0}, Sign::plus));
    GroupReport rep = group_check(family, 100, kBudget);
    CHECK(rep.passed());
    CHECK(rep.failures.empty());

    GroupReport trivially = group_check(
        {I1Element::wrap(identity_element(Sign::plus))}, 50, kBudget);
    CHECK(trivially.passed());
}

TEST_CASE("group_check reports a non-injective candidate with a witness") {
    MixedShuffle doubling = doc(R"json({"components": [
        {"domains": [{"kind": "plus_inf"}], "expr": "2*i0"}]})json");
    GroupReport rep = group_check({I1Element::wrap(doubling)}, 50, kBudget);
    CHECK(!rep.passed());
    CHECK(!rep.closure_ok);
    REQUIRE(!rep.failures.empty());
    CHECK(rep.failures[0].find("not a verified bijection") != std::string::npos);
}

TEST_CASE("degree >= 2 elements never compose back to a single chain") {
    MixedShuffle s3 = doc(kU3Pos);
    for (const char* text : {kSwap, kEvensU2, kU3Pos}) {
        ordinal::OrderType tau = order_type(compose(s3, doc(text)));
        REQUIRE(tau.atoms.size() == 1);
        CHECK(tau.atoms[0].kind == ordinal::Atom::Kind::omega);
        CHECK(tau.atoms[0].power >= 2); // never plain w, so never invertible
    }
}
