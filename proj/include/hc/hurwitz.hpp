#ifndef HC_HURWITZ_HPP
#define HC_HURWITZ_HPP

#include "hc/flows.hpp"
#include "hc/graphs.hpp"
#include "hc/numeric.hpp"

#include <atomic>
#include <future>
#include <map>
#include <mutex>
#include <vector>

namespace hc {

/// Concurrent get-or-compute map with at-most-once evaluation per key.
template <class K, class V>
class OnceCache {
public:
    template <class F>
    V get_or_compute(const K& key, F&& fn) {
        std::shared_future<V> fut;
        bool owner = false;
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = map_.find(key);
            if (it == map_.end()) {
                auto prom = std::make_shared<std::promise<V>>();
                fut = prom->get_future().share();
                map_.emplace(key, fut);
                pending_[key] = prom;
                owner = true;
            } else {
                fut = it->second;
            }
        }
        if (owner) {
            std::shared_ptr<std::promise<V>> prom;
            {
                std::lock_guard<std::mutex> lk(mu_);
                prom = pending_[key];
                pending_.erase(key);
            }
            try {
                prom->set_value(fn());
                computes_.fetch_add(1);
            } catch (...) {
                prom->set_exception(std::current_exception());
                std::lock_guard<std::mutex> lk(mu_);
                map_.erase(key);
            }
        }
        return fut.get();
    }
    long long computes() const { return computes_.load(); }

private:
    std::mutex mu_;
    std::map<K, std::shared_future<V>> map_;
    std::map<K, std::shared_ptr<std::promise<V>>> pending_;
    std::atomic<long long> computes_{0};
};

/// Double Hurwitz numbers assembled from graph contributions, with exact
/// values memoized by (r, sorted profile).
class HurwitzEngine {
public:
    explicit HurwitzEngine(long long max_degree = default_max_degree());

    /// H_g(x). Throws DegenerateCase for (g,n) = (0,2).
    Rat hurwitz(int g, const Profile& x);

    /// H^r(x): 0 when the genus constraint fails; H^0(d,-d) = 1/d base case.
    Rat hurwitz_r(int r, const Profile& x);

    /// Possibly-disconnected H^{r.}(x): sum over balanced set partitions of
    /// the ends and distributions of the r branch points with multinomials.
    Rat hurwitz_disconnected(int r, const Profile& x);

    /// Uncached single evaluation (used by symmetry tests).
    Rat hurwitz_nocache(int g, const Profile& x) const;

    const std::vector<XGraph>& graphs(int g, int n);
    /// Contributions aligned with graphs(g, n).
    std::vector<Rat> per_graph_contributions(int g, const Profile& x);

    long long cache_computes() const { return value_cache_.computes(); }
    long long max_degree() const { return max_degree_; }

    static long long default_max_degree();

private:
    Rat hurwitz_impl(int g, Profile x);
    long long max_degree_;
    using Key = std::pair<std::pair<int, int>, Profile>; // ((kind, r), sorted profile)
    OnceCache<Key, Rat> value_cache_;
    std::mutex graphs_mu_;
    std::map<std::pair<int, int>, std::vector<XGraph>> graph_store_;
};

} // namespace hc

#endif
