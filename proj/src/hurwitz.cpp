#include "hc/hurwitz.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace hc {

namespace {
constexpr int kConnected = 0;
constexpr int kDisconnected = 1;
} // namespace

long long HurwitzEngine::default_max_degree() {
    if (const char* env = std::getenv("HC_MAX_DEGREE")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 40;
}

HurwitzEngine::HurwitzEngine(long long max_degree) : max_degree_(max_degree) {}

const std::vector<XGraph>& HurwitzEngine::graphs(int g, int n) {
    std::lock_guard<std::mutex> lk(graphs_mu_);
    auto it = graph_store_.find({g, n});
    if (it == graph_store_.end())
        it = graph_store_.emplace(std::make_pair(g, n), enumerate_xgraphs(g, n)).first;
    return it->second;
}

Rat HurwitzEngine::hurwitz_nocache(int g, const Profile& x) const {
    require_valid_profile(x);
    const int n = static_cast<int>(x.size());
    if (g == 0 && n == 2) throw DegenerateCase("H_0 on two ends is the degenerate base case");
    if (profile_degree(x) > max_degree_) throw SizeLimit("profile degree exceeds HC_MAX_DEGREE");
    Rat total = 0;
    for (const XGraph& gr : enumerate_xgraphs(g, n)) total += graph_contribution(gr, x);
    total.canonicalize();
    return total;
}

Rat HurwitzEngine::hurwitz_impl(int g, Profile x) {
    const int n = static_cast<int>(x.size());
    Rat total = 0;
    for (const XGraph& gr : graphs(g, n)) total += graph_contribution(gr, x);
    total.canonicalize();
    return total;
}

Rat HurwitzEngine::hurwitz(int g, const Profile& x) {
    require_valid_profile(x);
    const int n = static_cast<int>(x.size());
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    if (g == 0 && n == 2) throw DegenerateCase("H_0 on two ends is the degenerate base case");
    if (profile_degree(x) > max_degree_) throw SizeLimit("profile degree exceeds HC_MAX_DEGREE");
    Profile key_profile(x);
    std::sort(key_profile.begin(), key_profile.end());
    int r = 2 * g - 2 + n;
    Key key{{kConnected, r}, key_profile};
    return value_cache_.get_or_compute(key, [&] { return hurwitz_impl(g, key_profile); });
}

Rat HurwitzEngine::hurwitz_r(int r, const Profile& x) {
    require_valid_profile(x);
    const int n = static_cast<int>(x.size());
    if (r < 0) return Rat(0);
    if (n == 2 && r == 0) {
        Rat base(1, static_cast<unsigned long>(profile_degree(x)));
        base.canonicalize();
        return base;
    }
    int twice_g = r - n + 2;
    if (twice_g < 0 || twice_g % 2 != 0) return Rat(0);
    return hurwitz(twice_g / 2, x);
}

Rat HurwitzEngine::hurwitz_disconnected(int r, const Profile& x) {
    require_valid_profile(x);
    const int n = static_cast<int>(x.size());
    if (r < 0) return Rat(0);
    Profile key_profile(x);
    std::sort(key_profile.begin(), key_profile.end());
    Key key{{kDisconnected, r}, key_profile};
    return value_cache_.get_or_compute(key, [&] {
        // unordered set partitions with every block balanced
        Rat total = 0;
        std::vector<std::vector<int>> blocks;
        auto assemble = [&]() {
            // distribute r among blocks with the multinomial r!/(prod r_j!)
            const std::size_t k = blocks.size();
            std::vector<Profile> sub(k);
            for (std::size_t j = 0; j < k; ++j)
                for (int idx : blocks[j]) sub[j].push_back(key_profile[idx]);
            std::vector<int> rs(k, 0);
            auto rec = [&](auto&& self, std::size_t j, int rest, const Rat& weight) -> void {
                if (j + 1 == k) {
                    Rat h = hurwitz_r(rest, sub[j]);
                    if (h != 0) total += weight * h;
                    return;
                }
                for (int rj = 0; rj <= rest; ++rj) {
                    Rat h = hurwitz_r(rj, sub[j]);
                    if (h == 0) continue;
                    Rat w = weight * Rat(binomial(static_cast<unsigned>(rest),
                                                  static_cast<unsigned>(rj)));
                    self(self, j + 1, rest - rj, w * h);
                }
            };
            if (k == 1) {
                total += hurwitz_r(r, sub[0]);
                return;
            }
            rec(rec, 0, r, Rat(1));
        };
        // grow partitions element by element; block order fixed by minima
        std::function<void(int)> grow = [&](int idx) {
            if (idx == n) {
                for (auto& b : blocks) {
                    long long s = 0;
                    for (int i : b) s += key_profile[i];
                    if (s != 0) return;
                }
                assemble();
                return;
            }
            for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
                blocks[bi].push_back(idx);
                grow(idx + 1);
                blocks[bi].pop_back();
            }
            blocks.push_back({idx});
            grow(idx + 1);
            blocks.pop_back();
        };
        grow(0);
        total.canonicalize();
        return total;
    });
}

std::vector<Rat> HurwitzEngine::per_graph_contributions(int g, const Profile& x) {
    require_valid_profile(x);
    std::vector<Rat> out;
    for (const XGraph& gr : graphs(g, static_cast<int>(x.size())))
        out.push_back(graph_contribution(gr, x));
    return out;
}

} // namespace hc
