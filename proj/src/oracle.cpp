#include "hc/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace hc {

namespace {

using Perm = std::vector<int>;

std::vector<long long> positive_parts(const Profile& x) {
    std::vector<long long> p;
    for (long long v : x)
        if (v > 0) p.push_back(v);
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<long long> negative_parts(const Profile& x) {
    std::vector<long long> p;
    for (long long v : x)
        if (v < 0) p.push_back(-v);
    std::sort(p.begin(), p.end());
    return p;
}

Perm class_representative(const std::vector<long long>& type, int d) {
    Perm s(d);
    std::iota(s.begin(), s.end(), 0);
    int at = 0;
    for (long long part : type) {
        for (int i = 0; i < part; ++i) s[at + i] = at + (i + 1) % part;
        at += static_cast<int>(part);
    }
    return s;
}

std::vector<long long> cycle_type(const Perm& s) {
    const int d = static_cast<int>(s.size());
    std::vector<bool> seen(d, false);
    std::vector<long long> type;
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = s[j];
            len++;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

int cycle_count(const Perm& s) {
    const int d = static_cast<int>(s.size());
    unsigned seen = 0;
    int cycles = 0;
    for (int i = 0; i < d; ++i) {
        if (seen >> i & 1u) continue;
        cycles++;
        for (int j = i; !(seen >> j & 1u); j = s[j]) seen |= 1u << j;
    }
    return cycles;
}

Int class_size(const std::vector<long long>& type, int d) {
    // d! / (prod k^{m_k} m_k!)
    std::map<long long, int> mult;
    for (long long k : type) mult[k]++;
    Int z = 1;
    for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= to_int(k);
        z *= factorial(static_cast<unsigned>(m));
    }
    return factorial(static_cast<unsigned>(d)) / z;
}

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int v) { return p[v] == v ? v : p[v] = find(p[v]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

bool generates_transitively(const Perm& sigma0, const std::vector<std::pair<int, int>>& taus,
                            int d) {
    Dsu dsu(d);
    for (int i = 0; i < d; ++i) dsu.unite(i, sigma0[i]);
    for (auto [a, b] : taus) dsu.unite(a, b);
    for (int i = 1; i < d; ++i)
        if (dsu.find(i) != dsu.find(0)) return false;
    return true;
}

// Count tau-sequences for a fixed sigma0, pruning on cycle-count parity
// and reachability of the target type.
Int count_sequences(const Perm& sigma0, int r, const std::vector<long long>& target_type, int d,
                    bool transitive_only) {
    std::vector<std::pair<int, int>> trans;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) trans.emplace_back(a, b);
    const int target_cycles = static_cast<int>(target_type.size());
    Int count = 0;
    Perm cur(sigma0);
    std::vector<std::pair<int, int>> chosen;
    auto rec = [&](auto&& self, int depth) -> void {
        int rem = r - depth;
        int diff = std::abs(cycle_count(cur) - target_cycles);
        if (diff > rem || (rem - diff) % 2 != 0) return;
        if (depth == r) {
            if (cycle_type(cur) != target_type) return;
            if (transitive_only && !generates_transitively(sigma0, chosen, d)) return;
            count += 1;
            return;
        }
        for (auto [a, b] : trans) {
            // right-multiplication; the count matches left products via inverses
            std::swap(cur[a], cur[b]);
            chosen.emplace_back(a, b);
            self(self, depth + 1);
            chosen.pop_back();
            std::swap(cur[a], cur[b]);
        }
    };
    rec(rec, 0);
    return count;
}

Rat normalized(const Profile& x, const Int& raw_count_fixed_rep) {
    auto p0 = positive_parts(x);
    auto pinf = negative_parts(x);
    const int d = static_cast<int>(profile_degree(x));
    std::map<long long, int> m0, minf;
    for (long long k : p0) m0[k]++;
    for (long long k : pinf) minf[k]++;
    Int marks = 1;
    for (auto [k, m] : m0) marks *= factorial(static_cast<unsigned>(m));
    for (auto [k, m] : minf) marks *= factorial(static_cast<unsigned>(m));
    Rat value(marks * class_size(p0, d) * raw_count_fixed_rep,
              factorial(static_cast<unsigned>(d)));
    value.canonicalize();
    return value;
}

void check_guard(int r, const Profile& x) {
    require_valid_profile(x);
    if (profile_degree(x) > 6 || r > 6 || r < 0)
        throw SizeLimit("oracle guarded to d <= 6, r <= 6");
}

} // namespace

Rat oracle_connected(int r, const Profile& x) {
    check_guard(r, x);
    const int d = static_cast<int>(profile_degree(x));
    Perm sigma0 = class_representative(positive_parts(x), d);
    Int count = count_sequences(sigma0, r, negative_parts(x), d, true);
    return normalized(x, count);
}

Rat oracle_disconnected(int r, const Profile& x) {
    check_guard(r, x);
    const int d = static_cast<int>(profile_degree(x));
    Perm sigma0 = class_representative(positive_parts(x), d);
    Int count = count_sequences(sigma0, r, negative_parts(x), d, false);
    return normalized(x, count);
}

Int oracle_count_full_class(int r, const Profile& x, bool transitive_only) {
    require_valid_profile(x);
    const int d = static_cast<int>(profile_degree(x));
    if (d > 4 || r > 4) throw SizeLimit("full-class oracle guarded to d <= 4, r <= 4");
    std::vector<long long> type0 = positive_parts(x);
    std::vector<long long> target = negative_parts(x);
    Perm s(d);
    std::iota(s.begin(), s.end(), 0);
    Int total = 0;
    // iterate over all permutations of S_d, keep those of type0
    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    do {
        Perm cand(idx.begin(), idx.end());
        if (cycle_type(cand) != type0) continue;
        total += count_sequences(cand, r, target, d, transitive_only);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return total;
}

} // namespace hc
