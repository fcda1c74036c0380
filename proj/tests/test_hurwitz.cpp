#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "hc/hurwitz.hpp"
#include "hc/oracle.hpp"

#include <algorithm>
#include <map>

using namespace hc;

namespace {
Rat q(const char* s) { return rat_parse(s); }
}

TEST_CASE("calibration fixtures lock the normalization") {
    HurwitzEngine engine;
    CHECK(engine.hurwitz(2, {2, -2}) == q("1/2"));
    CHECK(engine.hurwitz(0, {1, 1, -2}) == q("1"));
    CHECK(oracle_connected(6, {2, -2}) == q("1/2"));
    CHECK(oracle_connected(1, {1, 1, -2}) == q("1"));
}

TEST_CASE("genus-2 two-end values from the closed forms") {
    HurwitzEngine engine;
    auto total = [&](long long v) {
        Rat x = to_rat(v);
        Rat x3 = x * x * x, x5 = x3 * x * x, x7 = x5 * x * x;
        Rat t = (Rat(3) * x7 - Rat(10) * x5 + Rat(7) * x3) / Rat(240);
        t.canonicalize();
        return t;
    };
    CHECK(engine.hurwitz(2, {1, -1}) == Rat(0));
    CHECK(engine.hurwitz(2, {2, -2}) == total(2));
    CHECK(engine.hurwitz(2, {3, -3}) == total(3));
    CHECK(engine.hurwitz(2, {5, -5}) == total(5));
}

TEST_CASE("genus-0 three-end numbers are 1") {
    HurwitzEngine engine;
    CHECK(engine.hurwitz(0, {1, 1, -2}) == Rat(1));
    CHECK(engine.hurwitz(0, {2, 1, -3}) == Rat(1));
    CHECK(engine.hurwitz(0, {5, -2, -3}) == Rat(1));
}

TEST_CASE("hurwitz_r dispatch") {
    HurwitzEngine engine;
    CHECK(engine.hurwitz_r(0, {4, -4}) == q("1/4"));
    CHECK(engine.hurwitz_r(1, {2, -2}) == Rat(0));   // parity mismatch
    CHECK(engine.hurwitz_r(2, {2, -2}) == q("1/2")); // = H_1(2,-2)
    CHECK(engine.hurwitz_r(0, {1, 1, -2}) == Rat(0));
    CHECK_THROWS_AS(engine.hurwitz(0, {4, -4}), DegenerateCase);
}

TEST_CASE("symmetry and inversion invariance") {
    HurwitzEngine engine;
    Profile x = {3, 1, -2, -2};
    Rat base = engine.hurwitz_nocache(0, x);
    std::vector<int> idx = {0, 1, 2, 3};
    do {
        Profile p;
        for (int i : idx) p.push_back(x[i]);
        CHECK(engine.hurwitz_nocache(0, p) == base);
    } while (std::next_permutation(idx.begin(), idx.end()));
    Profile neg(x);
    for (auto& v : neg) v = -v;
    CHECK(engine.hurwitz_nocache(0, neg) == base);
    CHECK(engine.hurwitz_nocache(1, {4, -1, -3}) == engine.hurwitz_nocache(1, {-4, 1, 3}));
}

TEST_CASE("disconnected assembly small cases") {
    HurwitzEngine engine;
    CHECK(engine.hurwitz_disconnected(0, {1, 1, -1, -1}) == Rat(2));
    CHECK(engine.hurwitz_disconnected(0, {1, -1}) == Rat(1));
    CHECK(engine.hurwitz_disconnected(1, {1, -1}) == Rat(0)); // parity impossible
    // no proper balanced sub-multiset: equals the connected number
    CHECK(engine.hurwitz_disconnected(2, {3, -1, -2}) == engine.hurwitz_r(2, {3, -1, -2}));
    CHECK(engine.hurwitz_disconnected(2, {1, 1, -1, -1}) >=
          engine.hurwitz_r(2, {1, 1, -1, -1}));
}

TEST_CASE("oracle matches the engine on small profiles") {
    HurwitzEngine engine;
    for (auto [r, x] : std::vector<std::pair<int, Profile>>{
             {0, {2, -2}},
             {1, {1, 1, -2}},
             {2, {2, -2}},
             {2, {3, -3}},
             {4, {2, -2}},
             {3, {2, 1, -3}},
             {2, {2, -1, -1}},
             {4, {2, 2, -2, -2}},
         }) {
        CHECK(oracle_connected(r, x) == engine.hurwitz_r(r, x));
        CHECK(oracle_disconnected(r, x) == engine.hurwitz_disconnected(r, x));
        CHECK(oracle_connected(r, x) <= oracle_disconnected(r, x));
    }
}

TEST_CASE("fixed-representative optimization equals the full class sum") {
    for (auto [r, x] : std::vector<std::pair<int, Profile>>{
             {2, {2, -2}}, {1, {1, 1, -2}}, {3, {2, 1, -3}}, {2, {1, 1, -1, -1}}}) {
        const int d = static_cast<int>(profile_degree(x));
        Int full_total = oracle_count_full_class(r, x, true);
        Rat via_fixed = oracle_connected(r, x);
        std::map<long long, int> m0, minf;
        for (long long v : x) (v > 0 ? m0[v] : minf[-v])++;
        Int marks = 1;
        for (auto [k, m] : m0) marks *= factorial(static_cast<unsigned>(m));
        for (auto [k, m] : minf) marks *= factorial(static_cast<unsigned>(m));
        Rat via_full(marks * full_total, factorial(static_cast<unsigned>(d)));
        via_full.canonicalize();
        CHECK(via_fixed == via_full);
    }
}

TEST_CASE("deep factorization counts at six branch points") {
    HurwitzEngine engine;
    // r = 4 is the genus-2 two-end case with its closed form
    CHECK(engine.hurwitz_r(4, {3, -3}) == oracle_connected(4, {3, -3}));
    CHECK(engine.hurwitz_r(4, {3, -3}) == Rat(18)); // (3*3^7-10*3^5+7*27)/240
    // d = 3 keeps the transposition tree tiny even at r = 6 (genus 3)
    CHECK(engine.hurwitz_r(6, {3, -3}) == oracle_connected(6, {3, -3}));
    CHECK(engine.hurwitz_r(6, {1, 1, 1, -3}) == oracle_connected(6, {1, 1, 1, -3}));
    CHECK(engine.hurwitz_disconnected(6, {1, 1, 1, -3}) ==
          oracle_disconnected(6, {1, 1, 1, -3}));
}

TEST_CASE("oracle size guard") {
    CHECK_THROWS_AS(oracle_connected(7, {2, -2}), SizeLimit);
    CHECK_THROWS_AS(oracle_connected(1, {7, -7}), SizeLimit);
}

TEST_CASE("degree guard") {
    HurwitzEngine engine(6);
    CHECK_THROWS_AS(engine.hurwitz(0, {7, 1, -8}), SizeLimit);
}
