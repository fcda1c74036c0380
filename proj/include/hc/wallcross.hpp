#ifndef HC_WALLCROSS_HPP
#define HC_WALLCROSS_HPP

#include "hc/chambers.hpp"
#include "hc/cuts.hpp"
#include "hc/hurwitz.hpp"
#include "hc/poly.hpp"

#include <string>
#include <vector>

namespace hc {

/// P2 - P1: the jump of the chamber polynomial when crossing from the
/// chamber where sum_I x_i < 0 (c1) to the chamber where it is > 0 (c2).
Multipoly wc_lhs(HurwitzEngine& engine, int g, const HChamber& c1, const HChamber& c2,
                 const InterpOptions& opt = {});

/// Product expansion of the wall crossing over three-level splittings:
/// sum over s+t+u = r and ordered positive tuples y, z with
/// |y| = |z| = |sum_I x_i| of
///   (-1)^t (r;s,t,u) (prod y / l(y)!) (prod z / l(z)!)
///      H^s(x_I, y) H^{t.}(-y, z) H^u(x_{I^c}, -z),
/// evaluated at x with sum_I x_i < 0. Strata whose outer factor would be a
/// bare unramified cylinder (only possible when a side of the wall holds a
/// single end) do not come from a splitting of a connected cover and are
/// skipped; the result is oriented to match wc_lhs, so the returned value
/// is the wall-crossing polynomial at x.
Rat wc_rhs_light(HurwitzEngine& engine, int r, const Profile& x, EndSet I);

struct WallPointCheck {
    Profile at;
    Rat lhs;
    Rat other;
    std::string route; // "light" or "cones"
    bool ok = false;
};

struct WallReport {
    int g = 0, n = 0;
    EndSet subset = 0;
    Profile witness_c1, witness_c2;
    Multipoly wc;
    std::vector<WallPointCheck> checks;
    bool pass = false;
};

/// Interpolates both sides, evaluates the light formula at side-1 points and
/// the connection-coefficient route at side-2 points, and compares exactly.
WallReport verify_wall(HurwitzEngine& engine, int g, int n, EndSet I, std::uint64_t seed = 1,
                       int points = 5, const InterpOptions& opt = {});

} // namespace hc

#endif
