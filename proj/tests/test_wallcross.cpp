#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hc/wallcross.hpp"

using namespace hc;

namespace {
Rat q(const char* s) { return rat_parse(s); }
}

TEST_CASE("calibration wall: genus 1, two ends") {
    HurwitzEngine engine;
    HChamber c1 = classify({-3, 3});
    HChamber c2 = classify({3, -3});
    Multipoly wc = wc_lhs(engine, 1, c1, c2);
    Multipoly expect = Multipoly::zero(1);
    expect.add_term({3}, q("1/6"));
    expect.add_term({1}, q("-1/6"));
    CHECK(wc == expect);
    // the light formula agrees point by point on the negative side
    for (long long v = 2; v <= 6; ++v) {
        Profile at = {-v, v};
        CHECK(wc_rhs_light(engine, 2, at, 0b01) == wc.eval(at));
    }
    CHECK(wc_rhs_light(engine, 2, {-3, 3}, 0b01) == q("-4"));
}

TEST_CASE("crossing backwards negates the polynomial") {
    HurwitzEngine engine;
    HChamber c1 = classify({-3, 3});
    HChamber c2 = classify({3, -3});
    Multipoly ab = wc_lhs(engine, 1, c1, c2);
    Multipoly ba = wc_lhs(engine, 1, c2, c1);
    CHECK(Multipoly::zero(1) - ba == ab); // ba = -ab
    CHECK((ab - ab).terms.empty());
}

TEST_CASE("multinomial in the three-level splitting") {
    CHECK(multinomial(6, {3, 0, 3}) == 20);
    CHECK(multinomial(2, {1, 1, 0}) == 2);
}

TEST_CASE("light formula strata with impossible parity vanish") {
    HurwitzEngine engine;
    // r = 3 on a genus-impossible wall still evaluates (terms inside are 0)
    Profile at = {-2, -1, 3};
    // r for (g=0, n=3) is 1; use it
    Rat v = wc_rhs_light(engine, 1, at, 0b011);
    // crossing W_{1,2} in genus 0 with n = 3: jump of the constant 1
    // polynomial is 0
    CHECK(v == Rat(0));
}

TEST_CASE("verify_wall: genus 1 two ends") {
    HurwitzEngine engine;
    WallReport rep = verify_wall(engine, 1, 2, 0b01, 3);
    CHECK(rep.pass);
    CHECK(rep.wc.total_degree() == 3);
}

TEST_CASE("verify_wall: genus 0 four ends") {
    HurwitzEngine engine;
    WallReport rep = verify_wall(engine, 0, 4, 0b0011, 5);
    CHECK(rep.pass);
    for (auto& c : rep.checks) CHECK(c.ok);
}

TEST_CASE("verify_wall: genus 1 three ends") {
    HurwitzEngine engine;
    WallReport rep = verify_wall(engine, 1, 3, 0b001, 7);
    CHECK(rep.pass);
}

TEST_CASE("singleton and doubleton walls share the code path") {
    HurwitzEngine engine;
    WallReport singleton = verify_wall(engine, 0, 4, 0b0001, 9);
    CHECK(singleton.pass);
}

TEST_CASE("wall whose complement is a single end") {
    HurwitzEngine engine;
    WallReport rep = verify_wall(engine, 1, 3, 0b011, 41);
    CHECK(rep.pass);
}

TEST_CASE("genus-2 two-end wall: the jump doubles the chamber polynomial") {
    HurwitzEngine engine;
    WallReport rep = verify_wall(engine, 2, 2, 0b01, 43);
    CHECK(rep.pass);
    Multipoly expect = Multipoly::zero(1);
    expect.add_term({7}, q("1/40"));
    expect.add_term({5}, q("-1/12"));
    expect.add_term({3}, q("7/120"));
    CHECK(rep.wc == expect);
}

TEST_CASE("five-end wall") {
    HurwitzEngine engine;
    WallReport rep = verify_wall(engine, 0, 5, 0b00011, 45);
    CHECK(rep.pass);
}
