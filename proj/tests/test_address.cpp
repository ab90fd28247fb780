#include <doctest.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <random>
#include <thread>

#include "shuffles/address.hpp"
#include "shuffles/errors.hpp"
#include "shuffles/fixtures.hpp"
#include "shuffles/json_io.hpp"
#include "sharkovskii_oracle.hpp"

using namespace shuffles;

namespace {

constexpr Int kBudget = 1'000'000;

Address addr(Int t, std::vector<Int> idx) { return Address{t, std::move(idx)}; }

} // namespace

TEST_CASE("lexicographic comparison of addresses") {
    auto lt = [](Address a, Address b) { return lex_compare(a, b) == Ordering::lt; };
    CHECK(lt(addr(0, {4}), addr(0, {11})));
    CHECK(lt(addr(1, {2}), addr(1, {10})));
    CHECK(lt(addr(0, {11}), addr(1, {2})));
    CHECK(lt(addr(0, {2}), addr(1, {-2, -3})));
    CHECK(lt(addr(1, {-2, -3}), addr(1, {-1, -7})));
    CHECK(lt(addr(1, {-1, -7}), addr(1, {-1, -1})));
    CHECK(lt(addr(1, {3}), addr(1, {3, 5}))); // strict prefix precedes
    CHECK(lex_compare(addr(1, {3, 5}), addr(1, {3, 5})) == Ordering::eq);
    CHECK(lex_compare(addr(2, {0}), addr(1, {9})) == Ordering::gt);
}

TEST_CASE("lex order is a strict total order on random tuples") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<Int> coord(-4, 4);
    std::uniform_int_distribution<size_t> len(0, 3);
    auto random_addr = [&] {
        Address a;
        a.t = coord(rng);
        a.indices.resize(len(rng));
        for (Int& i : a.indices) i = coord(rng);
        return a;
    };
    for (int i = 0; i < 2000; ++i) {
        Address a = random_addr(), b = random_addr(), c = random_addr();
        // antisymmetry + totality
        int lt_ab = lex_compare(a, b) == Ordering::lt;
        int lt_ba = lex_compare(b, a) == Ordering::lt;
        int eq = lex_compare(a, b) == Ordering::eq;
        CHECK(lt_ab + lt_ba + eq == 1);
        CHECK(eq == (a == b));
        // transitivity
        if (lex_compare(a, b) != Ordering::gt && lex_compare(b, c) != Ordering::gt)
            CHECK(lex_compare(a, c) != Ordering::gt);
    }
}

TEST_CASE("addresses and values on the worked fixtures") {
    AddressIndex eo(fixtures::load("evens_odds"));
    CHECK(eo.address_of(3, kBudget) == addr(1, {1}));
    CHECK(eo.address_of(4, kBudget) == addr(0, {2}));
    CHECK(eo.value_at(addr(1, {1})) == 3);

    AddressIndex rev(fixtures::load("sharkovskii_reversed"));
    CHECK(rev.address_of(2, kBudget) == addr(0, {1}));
    CHECK(rev.address_of(36, kBudget) == addr(1, {-3, -4}));
    CHECK(rev.value_at(addr(1, {-3, -4})) == 36);
    CHECK(rev.value_at(addr(1, {-1, -1})) == 3);

    AddressIndex bench(shuffle_from_json(R"json({"components": [
        {"domains": [{"kind": "finite_prefix", "m": 3}],
         "expr": "2*i0^2 - 3*i0 + 1"}]})json"));
    CHECK(bench.address_of(0, kBudget) == addr(0, {1}));

    // round trips
    for (Int x : {0, 1, 2, 3, 10, 99})
        CHECK(eo.value_at(eo.address_of(x, kBudget)) == x);
}

TEST_CASE("value_at rejects out-of-domain addresses") {
    AddressIndex eo(fixtures::load("evens_odds"));
    CHECK_THROWS_AS((void)eo.value_at(addr(0, {-1})), Error);
    CHECK_THROWS_AS((void)eo.value_at(addr(2, {0})), Error);
    CHECK_THROWS_AS((void)eo.value_at(addr(0, {0, 0})), Error);
}

TEST_CASE("address_of signals budget exhaustion with the steps used") {
    AddressIndex rev(fixtures::load("sharkovskii_reversed"));
    try {
        (void)rev.address_of(0, 500); // 0 is not covered
        FAIL("0 has no address");
    } catch (const Error& e) {
        CHECK(e.code == Errc::not_found_within_budget);
        CHECK(e.budget_used >= 500);
    }
    // a later call with more budget resumes and still fails fast
    try {
        (void)rev.address_of(0, 1000);
    } catch (const Error& e) {
        CHECK(e.budget_used >= 1000);
    }
}

TEST_CASE("precedes reproduces the worked chains") {
    AddressIndex eo(fixtures::load("evens_odds"));
    CHECK(eo.precedes(8, 22, kBudget));
    CHECK(eo.precedes(22, 5, kBudget));
    CHECK(eo.precedes(5, 21, kBudget));
    CHECK(!eo.precedes(21, 8, kBudget));
    CHECK(!eo.precedes(7, 7, kBudget));

    AddressIndex rev(fixtures::load("sharkovskii_reversed"));
    CHECK(rev.precedes(4, 14, kBudget));
    CHECK(rev.precedes(14, 15, kBudget));
    CHECK(rev.precedes(15, 3, kBudget));
}

TEST_CASE("sort_prefix orders by the induced order") {
    AddressIndex shark(fixtures::load("sharkovskii"));
    CHECK(shark.sort_prefix({1, 2, 3, 5, 6, 10}, kBudget) ==
          std::vector<Int>{3, 5, 6, 10, 2, 1});

    AddressIndex id(fixtures::load("identity"));
    CHECK(id.sort_prefix({3, 1, 2}, kBudget) == std::vector<Int>{1, 2, 3});

    AddressIndex eo(fixtures::load("evens_odds"));
    CHECK(eo.sort_prefix({1, 2, 3, 4}, kBudget) == std::vector<Int>{2, 4, 1, 3});
}

TEST_CASE("sort_prefix agrees with position order on finite benches") {
    AddressIndex bench(shuffle_from_json(R"json({"components": [
        {"domains": [{"kind": "finite_prefix", "m": 3}],
         "expr": "2*i0^2 - 3*i0 + 1"},
        {"domains": [{"kind": "finite_prefix", "m": 2}], "expr": "4 + i0"}]})json"));
    CHECK(bench.sort_prefix({5, 4, 3, 0, 1}, kBudget) ==
          std::vector<Int>{1, 0, 3, 4, 5});
}

TEST_CASE("segment successor follows the innermost index") {
    AddressIndex id(fixtures::load("identity"));
    CHECK(id.segment_successor(5, kBudget) == Int(6));

    AddressIndex eo(fixtures::load("evens_odds"));
    CHECK(eo.segment_successor(8, kBudget) == Int(10));

    AddressIndex bench(shuffle_from_json(R"json({"components": [
        {"domains": [{"kind": "finite_prefix", "m": 3}],
         "expr": "2*i0^2 - 3*i0 + 1"}]})json"));
    CHECK(bench.segment_successor(3, kBudget) == std::nullopt);
    CHECK(bench.segment_successor(0, kBudget) == Int(3));

    // a snake's maximal element (index 0) ends its segment
    AddressIndex rev(fixtures::load("sharkovskii_reversed"));
    CHECK(rev.segment_successor(5, kBudget) == Int(3));  // (1,-1,-2) -> (1,-1,-1)
    CHECK(rev.segment_successor(3, kBudget) == std::nullopt);
}

TEST_CASE("trichotomy and transitivity on sampled naturals") {
    std::mt19937 rng(43);
    for (const std::string& name : fixtures::names()) {
        MixedShuffle s = fixtures::load(name);
        AddressIndex index(std::move(s));
        // sample within the fixture's support
        Int lo = name == "sharkovskii_reversed" ? 1 : 0;
        Int hi = name == "three_ladder" ? 90 : 60;
        if (name == "three_ladder") lo = 1;
        std::uniform_int_distribution<Int> pick(lo, hi);
        for (int i = 0; i < 300; ++i) {
            Int x = pick(rng), y = pick(rng), z = pick(rng);
            bool xy = index.precedes(x, y, kBudget);
            bool yx = index.precedes(y, x, kBudget);
            if (x == y)
                CHECK((!xy && !yx));
            else
                CHECK(xy != yx);
            if (index.precedes(x, y, kBudget) && index.precedes(y, z, kBudget))
                CHECK(index.precedes(x, z, kBudget));
        }
    }
}

TEST_CASE("discreteness: nothing sits between x and its segment successor") {
    for (const std::string& name : {std::string("identity"), std::string("evens_odds"),
                                    std::string("sharkovskii")}) {
        AddressIndex index(fixtures::load(name));
        for (Int x = 0; x <= 40; ++x) {
            auto y = index.segment_successor(x, kBudget);
            if (!y) continue;
            for (Int z = 0; z <= 120; ++z) {
                if (z == x || z == *y) continue;
                CHECK(!(index.precedes(x, z, kBudget) &&
                        index.precedes(z, *y, kBudget)));
            }
        }
    }
}

TEST_CASE("sorted prefixes split into coefficient-many ascending chains") {
    // bounded reading of the order types w*2 and w*3: the first values,
    // sorted, are exactly 2 (resp. 3) maximal ascending runs
    auto runs = [](const std::vector<Int>& sorted) {
        size_t n = sorted.empty() ? 0 : 1;
        for (size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] < sorted[i - 1]) ++n;
        return n;
    };
    AddressIndex eo(fixtures::load("evens_odds"));
    std::vector<Int> first(60);
    std::iota(first.begin(), first.end(), 0);
    CHECK(runs(eo.sort_prefix(first, kBudget)) == 2);

    AddressIndex l3(fixtures::load("three_ladder"));
    std::vector<Int> vals(60);
    std::iota(vals.begin(), vals.end(), 1);
    CHECK(runs(l3.sort_prefix(vals, kBudget)) == 3);
}

TEST_CASE("concurrent queries agree with the serial answers") {
    AddressIndex index(fixtures::load("sharkovskii"));
    std::vector<std::thread> workers;
    std::array<std::atomic<int>, 4> bad{};
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&, w] {
            for (Int x = 1; x <= 80; ++x)
                for (Int y = 1; y <= 80; ++y) {
                    if (x == y) continue;
                    if (index.precedes(x, y, kBudget) ==
                        index.precedes(y, x, kBudget))
                        ++bad[static_cast<size_t>(w)];
                }
        });
    for (auto& t : workers) t.join();
    for (auto& b : bad) CHECK(b.load() == 0);
}

TEST_CASE("the sharkovskii fixture matches its closed-form comparator") {
    AddressIndex shark(fixtures::load("sharkovskii"));
    for (Int x = 0; x <= 64; ++x)
        for (Int y = 0; y <= 64; ++y) {
            if (x == y) continue;
            CHECK(shark.precedes(x, y, kBudget) == sharkovskii_oracle::precedes(x, y));
        }
}
