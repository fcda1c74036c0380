#ifndef HC_CHAMBERS_HPP
#define HC_CHAMBERS_HPP

#include "hc/hurwitz.hpp"
#include "hc/poly.hpp"

#include <cstdint>
#include <vector>

namespace hc {

struct OnWall : std::runtime_error {
    EndSet subset;
    explicit OnWall(EndSet s)
        : std::runtime_error("point lies on a resonance wall"), subset(s) {}
};

/// Canonical representatives of the proper resonance subsets: every
/// nonempty I containing end 1, excluding the full set (complements are
/// identified). 2^{n-1} - 1 subsets.
std::vector<EndSet> resonance_subsets(int n);

long long subset_sum(const Profile& x, EndSet I);

/// An H-chamber: the sign of sum_{i in I} x_i for each canonical subset.
struct HChamber {
    int n = 0;
    std::vector<int> sign;  // aligned with resonance_subsets(n), entries +-1
    Profile witness;

    bool operator==(const HChamber& o) const { return n == o.n && sign == o.sign; }
    bool operator<(const HChamber& o) const { return sign < o.sign; }
    /// The chamber with every resonance sign flipped (contains -witness).
    HChamber negated() const;
};

/// Throws OnWall when some resonance sum vanishes.
HChamber classify(const Profile& x);

/// k integer points of the chamber, seeded and deterministic.
std::vector<Profile> sample_chamber(const HChamber& c, int k, long long bound, std::uint64_t seed);

/// A pair (x-, x+) of integer points in the two chambers adjacent across
/// W_I, differing only in the sign of sum_I x_i (x- on the negative side).
std::pair<Profile, Profile> adjacent_pair(EndSet I, int n, std::uint64_t seed = 1,
                                          long long bound = 40);

struct InterpOptions {
    int holdout = 10;
    long long bound = 7;
    std::uint64_t seed = 20240501;
    int max_retries = 7;
};

/// Exact chamber polynomial of H_g in x_1..x_{n-1} (x_n eliminated via the
/// zero-sum constraint), fitted on the parity-restricted monomial basis of
/// degree <= 4g-3+n and verified on held-out chamber points.
Multipoly interpolate(HurwitzEngine& engine, int g, const HChamber& c,
                      const InterpOptions& opt = {});

struct DegreeParityReport {
    int degree = 0;
    bool degree_ok = false;
    bool parity_pure = false;
    int min_degree = 0;
    bool min_degree_ok = false;  // warning-level: >= 2g-3+n
};

DegreeParityReport degree_parity_report(const Multipoly& p, int g, int n);

/// Distinct chambers discovered by seeded sampling; for n <= 4 this finds
/// the whole arrangement quickly.
std::vector<HChamber> discover_chambers(int n, int samples, long long bound, std::uint64_t seed);

} // namespace hc

#endif
