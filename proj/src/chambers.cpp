#include "hc/chambers.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <thread>

namespace hc {

std::vector<EndSet> resonance_subsets(int n) {
    if (n < 2) throw std::invalid_argument("resonance_subsets: need n >= 2");
    std::vector<EndSet> out;
    const EndSet full = (EndSet{1} << n) - 1;
    for (EndSet I = 1; I < full; ++I)
        if (I & 1u) out.push_back(I);
    return out;
}

long long subset_sum(const Profile& x, EndSet I) {
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (I >> i & 1u) s += x[i];
    return s;
}

HChamber HChamber::negated() const {
    HChamber c(*this);
    for (int& s : c.sign) s = -s;
    for (long long& v : c.witness) v = -v;
    return c;
}

HChamber classify(const Profile& x) {
    require_valid_profile(x);
    HChamber c;
    c.n = static_cast<int>(x.size());
    c.witness = x;
    for (EndSet I : resonance_subsets(c.n)) {
        long long s = subset_sum(x, I);
        if (s == 0) throw OnWall(I);
        c.sign.push_back(s > 0 ? 1 : -1);
    }
    return c;
}

namespace {

Profile random_profile(int n, long long bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> pick(-bound, bound);
    for (int tries = 0; tries < 1000; ++tries) {
        Profile x(n);
        long long sum = 0;
        for (int i = 0; i + 1 < n; ++i) {
            do {
                x[i] = pick(rng);
            } while (x[i] == 0);
            sum += x[i];
        }
        x[n - 1] = -sum;
        if (x[n - 1] == 0) continue;
        return x;
    }
    throw SamplingFailed("could not draw a nonzero-entry profile");
}

} // namespace

std::vector<Profile> sample_chamber(const HChamber& c, int k, long long bound,
                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Profile> out;
    std::set<Profile> seen;
    int tries = 0;
    const int max_tries = 200000;
    while (static_cast<int>(out.size()) < k && tries++ < max_tries) {
        Profile x = random_profile(c.n, bound, rng);
        try {
            if (classify(x) == c && seen.insert(x).second) out.push_back(x);
        } catch (const OnWall&) {
        }
    }
    if (static_cast<int>(out.size()) < k)
        throw SamplingFailed("sample_chamber: raise the bound");
    return out;
}

std::pair<Profile, Profile> adjacent_pair(EndSet I, int n, std::uint64_t seed, long long bound) {
    const EndSet full = (EndSet{1} << n) - 1;
    if (I == 0 || I >= full) throw std::invalid_argument("adjacent_pair: subset must be proper");
    std::mt19937_64 rng(seed);
    int i0 = -1, j0 = -1;
    for (int i = 0; i < n; ++i)
        if (I >> i & 1u) {
            i0 = i;
            break;
        }
    for (int j = 0; j < n; ++j)
        if (!(I >> j & 1u)) {
            j0 = j;
            break;
        }
    for (int attempt = 0; attempt < 200000; ++attempt) {
        Profile x = random_profile(n, bound, rng);
        long long sI = subset_sum(x, I);
        if (sI != -1 && sI != -2) continue;
        bool margins = true;
        for (EndSet J : resonance_subsets(n)) {
            if (J == I || J == (full ^ I)) continue;
            if (std::llabs(subset_sum(x, J)) <= 2 * std::llabs(sI)) margins = false;
        }
        if (!margins) continue;
        Profile y = x;
        y[i0] += 2 * (-sI);
        y[j0] -= 2 * (-sI);
        bool ok = y[i0] != 0 && y[j0] != 0 && subset_sum(y, I) == -sI;
        if (!ok) continue;
        try {
            HChamber cx = classify(x), cy = classify(y);
            // must differ exactly on W_I (and its complement)
            auto subs = resonance_subsets(n);
            bool adjacent = true;
            for (std::size_t t = 0; t < subs.size(); ++t) {
                bool is_wall = subs[t] == I || subs[t] == (full ^ I);
                if (is_wall ? cx.sign[t] == cy.sign[t] : cx.sign[t] != cy.sign[t])
                    adjacent = false;
            }
            long long sxI = subset_sum(x, I);
            if (adjacent && sxI < 0 && subset_sum(y, I) > 0) return {x, y};
        } catch (const OnWall&) {
        }
    }
    throw SamplingFailed("adjacent_pair: no pair found within bound");
}

namespace {

std::vector<std::vector<int>> parity_monomials(int nvars, int maxdeg) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    auto rec = [&](auto&& self, int var, int used) -> void {
        if (var == nvars) {
            if ((maxdeg - used) % 2 == 0) out.push_back(cur);
            return;
        }
        for (int e = 0; e + used <= maxdeg; ++e) {
            cur[var] = e;
            self(self, var + 1, used + e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace

Multipoly interpolate(HurwitzEngine& engine, int g, const HChamber& c, const InterpOptions& opt) {
    const int n = c.n;
    const int nvars = n - 1;
    const int maxdeg = 4 * g - 3 + n;
    if (maxdeg < 0) throw std::invalid_argument("interpolate: degenerate (g,n)");
    auto monos = parity_monomials(nvars, maxdeg);

    const long long cap = engine.max_degree();
    long long bound = std::min(opt.bound, cap);
    for (int attempt = 0; attempt < opt.max_retries; ++attempt, bound = std::min(2 * bound, cap)) {
        int want = static_cast<int>(monos.size()) + opt.holdout + 4;
        std::vector<Profile> pts;
        try {
            pts = sample_chamber(c, 2 * want, bound, opt.seed + attempt);
        } catch (const SamplingFailed&) {
            try {
                pts = sample_chamber(c, want, bound, opt.seed + attempt);
            } catch (const SamplingFailed&) {
                continue;
            }
        }
        // respect the engine's degree cap
        pts.erase(std::remove_if(pts.begin(), pts.end(),
                                 [&](const Profile& p) {
                                     return profile_degree(p) > engine.max_degree();
                                 }),
                  pts.end());
        if (static_cast<int>(pts.size()) < want) continue;
        pts.resize(want);
        // sample evaluations run concurrently; the exact solve stays serial
        std::vector<Rat> values(pts.size());
        {
            unsigned workers = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errs(workers);
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t i = next.fetch_add(1); i < pts.size();
                             i = next.fetch_add(1))
                            values[i] = engine.hurwitz(g, pts[i]);
                    } catch (...) {
                        errs[w] = std::current_exception();
                    }
                });
            for (auto& th : pool) th.join();
            for (auto& e : errs)
                if (e) std::rethrow_exception(e);
        }
        std::vector<std::vector<Rat>> A;
        std::vector<Rat> rhs;
        std::size_t fit_rows = monos.size() + 4 > pts.size() ? pts.size() : monos.size() + 4;
        for (std::size_t p = 0; p < fit_rows; ++p) {
            std::vector<Rat> row;
            row.reserve(monos.size());
            for (auto& e : monos) {
                Rat t = 1;
                for (int v = 0; v < nvars; ++v)
                    for (int k = 0; k < e[v]; ++k) t *= to_rat(pts[p][v]);
                row.push_back(t);
            }
            A.push_back(std::move(row));
            rhs.push_back(values[p]);
        }
        std::vector<Rat> coeffs;
        if (!solve_exact(A, rhs, coeffs)) continue;
        Multipoly poly = Multipoly::zero(nvars);
        for (std::size_t t = 0; t < monos.size(); ++t) poly.add_term(monos[t], coeffs[t]);
        bool verified = true;
        for (std::size_t p = fit_rows; p < pts.size(); ++p)
            if (poly.eval(pts[p]) != values[p]) verified = false;
        if (verified) return poly;
    }
    throw RankDeficient("interpolate: samples insufficient; resample deeper");
}

DegreeParityReport degree_parity_report(const Multipoly& p, int g, int n) {
    DegreeParityReport rep;
    const int expect = 4 * g - 3 + n;
    rep.degree = p.total_degree();
    rep.degree_ok = rep.degree == expect;
    rep.parity_pure = p.parity_pure(expect);
    rep.min_degree = p.min_degree();
    rep.min_degree_ok = rep.min_degree >= 2 * g - 3 + n;
    return rep;
}

std::vector<HChamber> discover_chambers(int n, int samples, long long bound, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<HChamber> seen;
    std::vector<HChamber> out;
    for (int i = 0; i < samples; ++i) {
        try {
            HChamber c = classify(random_profile(n, bound, rng));
            if (seen.insert(c).second) out.push_back(c);
        } catch (const OnWall&) {
        } catch (const SamplingFailed&) {
        }
    }
    return out;
}

} // namespace hc
