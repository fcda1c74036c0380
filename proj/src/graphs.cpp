#include "hc/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace hc {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int v) { return p[v] == v ? v : p[v] = find(p[v]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

XGraph XGraph::make(int genus, std::vector<int> end_vertex,
                    std::vector<std::pair<int, int>> edges) {
    XGraph g;
    g.genus = genus;
    g.end_vertex = std::move(end_vertex);
    g.edges = std::move(edges);
    int r = 0;
    for (int v : g.end_vertex) r = std::max(r, v + 1);
    for (auto& [a, b] : g.edges) {
        if (a > b) std::swap(a, b);
        r = std::max(r, b + 1);
    }
    g.num_vertices = r;
    std::sort(g.edges.begin(), g.edges.end());
    g.validate();
    return g;
}

void XGraph::validate() const {
    const int r = num_vertices;
    const int n = num_ends();
    if (n < 2) throw std::invalid_argument("x-graph needs at least two ends");
    if (r != 2 * genus - 2 + n) throw std::invalid_argument("vertex count does not match genus");
    if (num_edges() != 3 * genus - 3 + n) throw std::invalid_argument("edge count does not match genus");
    std::vector<int> deg(r, 0);
    for (int v : end_vertex) {
        if (v < 0 || v >= r) throw std::invalid_argument("end attached to missing vertex");
        deg[v]++;
    }
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= r || b >= r) throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self-loops are not allowed");
        deg[a]++;
        deg[b]++;
    }
    for (int v = 0; v < r; ++v)
        if (deg[v] != 3) throw std::invalid_argument("internal vertex is not trivalent");
    Dsu dsu(r);
    for (auto [a, b] : edges) dsu.unite(a, b);
    for (int v = 1; v < r; ++v)
        if (dsu.find(v) != dsu.find(0)) throw std::invalid_argument("graph is disconnected");
}

namespace {

std::vector<int> encode(const std::vector<int>& ends,
                        const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> key;
    key.reserve(ends.size() + 2 * edges.size());
    for (int v : ends) key.push_back(v);
    for (auto [a, b] : edges) {
        key.push_back(a);
        key.push_back(b);
    }
    return key;
}

std::vector<int> key_under_perm(const XGraph& g, const std::vector<int>& perm) {
    std::vector<int> ends(g.num_ends());
    for (int i = 0; i < g.num_ends(); ++i) ends[i] = perm[g.end_vertex[i]];
    std::vector<std::pair<int, int>> edges(g.edges);
    for (auto& [a, b] : edges) {
        a = perm[a];
        b = perm[b];
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    return encode(ends, edges);
}

} // namespace

std::vector<int> XGraph::canonical_key() const {
    if (num_vertices > 16) throw SizeLimit("canonical form limited to 16 internal vertices");
    // lexicographic minimality forces the end-carrying vertices to take ids
    // in order of first appearance in the end list; only the endless
    // vertices are free, over the leftover ids
    std::vector<int> perm(num_vertices, -1);
    int next_id = 0;
    for (int v : end_vertex)
        if (perm[v] < 0) perm[v] = next_id++;
    std::vector<int> free_vertices;
    for (int v = 0; v < num_vertices; ++v)
        if (perm[v] < 0) free_vertices.push_back(v);
    std::vector<int> free_ids(free_vertices.size());
    std::iota(free_ids.begin(), free_ids.end(), next_id);

    std::vector<int> best;
    do {
        for (std::size_t j = 0; j < free_vertices.size(); ++j)
            perm[free_vertices[j]] = free_ids[j];
        std::vector<int> k = key_under_perm(*this, perm);
        if (best.empty() || k < best) best = std::move(k);
    } while (std::next_permutation(free_ids.begin(), free_ids.end()));
    return best;
}

XGraph XGraph::relabel_ends(const std::vector<int>& perm) const {
    std::vector<int> ends(num_ends());
    for (int i = 0; i < num_ends(); ++i) ends[i] = end_vertex[perm[i]];
    return XGraph::make(genus, ends, edges);
}

namespace {

// Every bridge must separate ends from ends; a bridge-side with no ends
// forces an internal sink or source in any acyclic orientation.
bool every_bridge_splits_ends(const XGraph& g) {
    const int m = g.num_edges();
    for (int e = 0; e < m; ++e) {
        Dsu dsu(g.num_vertices);
        for (int f = 0; f < m; ++f)
            if (f != e) dsu.unite(g.edges[f].first, g.edges[f].second);
        if (dsu.find(g.edges[e].first) == dsu.find(g.edges[e].second)) continue;
        std::vector<int> ends_in_comp(g.num_vertices, 0);
        for (int v : g.end_vertex) ends_in_comp[dsu.find(v)]++;
        if (ends_in_comp[dsu.find(g.edges[e].first)] == 0 ||
            ends_in_comp[dsu.find(g.edges[e].second)] == 0)
            return false;
    }
    return true;
}

void multigraphs_with_degrees(const std::vector<int>& deg,
                              std::vector<std::vector<std::pair<int, int>>>& out) {
    const int r = static_cast<int>(deg.size());
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) pairs.emplace_back(a, b);
    std::vector<int> rem(deg);
    std::vector<std::pair<int, int>> cur;
    std::function<void(std::size_t)> go = [&](std::size_t idx) {
        if (idx == pairs.size()) {
            for (int v = 0; v < r; ++v)
                if (rem[v] != 0) return;
            out.push_back(cur);
            return;
        }
        auto [a, b] = pairs[idx];
        go(idx + 1);
        int added = 0;
        while (rem[a] > 0 && rem[b] > 0) {
            rem[a]--;
            rem[b]--;
            cur.emplace_back(a, b);
            added++;
            go(idx + 1);
        }
        while (added-- > 0) {
            rem[a]++;
            rem[b]++;
            cur.pop_back();
        }
    };
    go(0);
}

} // namespace

std::vector<XGraph> enumerate_xgraphs(int g, int n) {
    if (g < 0 || n < 2) throw std::invalid_argument("enumerate_xgraphs: need g >= 0, n >= 2");
    if (g == 0 && n == 2) throw DegenerateCase("(g,n) = (0,2) has no trivalent graphs");
    const int r = 2 * g - 2 + n;
    const int m = 3 * g - 3 + n;
    std::set<std::vector<int>> seen;
    std::vector<XGraph> out;

    std::vector<int> assign(n, 0);
    auto next_assign = [&]() {
        for (int i = n - 1; i >= 0; --i) {
            if (++assign[i] < r) return true;
            assign[i] = 0;
        }
        return false;
    };
    do {
        std::vector<int> load(r, 0);
        bool ok = true;
        for (int v : assign)
            if (++load[v] > 3) ok = false;
        if (!ok) continue;
        std::vector<int> deg(r);
        for (int v = 0; v < r; ++v) deg[v] = 3 - load[v];
        if (std::accumulate(deg.begin(), deg.end(), 0) != 2 * m) continue;

        std::vector<std::vector<std::pair<int, int>>> graphs;
        multigraphs_with_degrees(deg, graphs);
        for (auto& edges : graphs) {
            Dsu dsu(r);
            for (auto [a, b] : edges) dsu.unite(a, b);
            bool connected = true;
            for (int v = 1; v < r; ++v)
                if (dsu.find(v) != dsu.find(0)) connected = false;
            if (!connected) continue;
            XGraph cand;
            cand.genus = g;
            cand.num_vertices = r;
            cand.end_vertex = assign;
            cand.edges = edges;
            std::sort(cand.edges.begin(), cand.edges.end());
            if (!every_bridge_splits_ends(cand)) continue;
            std::vector<int> key = cand.canonical_key();
            if (seen.insert(key).second) {
                // rebuild in canonical labeling so output is reproducible
                std::vector<int> ends(key.begin(), key.begin() + n);
                std::vector<std::pair<int, int>> es;
                for (int i = n; i + 1 < static_cast<int>(key.size()); i += 2)
                    es.emplace_back(key[i], key[i + 1]);
                out.push_back(XGraph::make(g, ends, es));
            }
        }
    } while (next_assign());

    std::sort(out.begin(), out.end(), [](const XGraph& a, const XGraph& b) {
        return encode(a.end_vertex, a.edges) < encode(b.end_vertex, b.edges);
    });
    return out;
}

long long automorphism_count(const XGraph& g) {
    const int r = g.num_vertices;
    std::map<std::pair<int, int>, int> mult;
    for (auto e : g.edges) mult[e]++;
    long long vertex_auts = 0;
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v : g.end_vertex)
            if (perm[v] != v) ok = false;
        if (!ok) continue;
        for (auto& [e, c] : mult) {
            int a = perm[e.first], b = perm[e.second];
            if (a > b) std::swap(a, b);
            auto it = mult.find({a, b});
            if (it == mult.end() || it->second != c) {
                ok = false;
                break;
            }
        }
        if (ok) vertex_auts++;
    } while (std::next_permutation(perm.begin(), perm.end()));
    long long edge_swaps = 1;
    for (auto& [e, c] : mult)
        for (int k = 2; k <= c; ++k) edge_swaps *= k;
    return vertex_auts * edge_swaps;
}

std::vector<int> end_signs(const Profile& x) {
    std::vector<int> s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] > 0 ? 1 : -1;
    return s;
}

bool orientation_acyclic(const XGraph& g, OrientMask o) {
    const int r = g.num_vertices;
    std::vector<int> indeg(r, 0);
    for (int e = 0; e < g.num_edges(); ++e) indeg[g.head(e, o)]++;
    std::vector<int> queue;
    for (int v = 0; v < r; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        seen++;
        for (int e = 0; e < g.num_edges(); ++e)
            if (g.tail(e, o) == v && --indeg[g.head(e, o)] == 0) queue.push_back(g.head(e, o));
    }
    return seen == r;
}

bool orientation_no_sink_source(const XGraph& g, OrientMask o, const std::vector<int>& xsign) {
    const int r = g.num_vertices;
    std::vector<int> in(r, 0), out(r, 0);
    for (int e = 0; e < g.num_edges(); ++e) {
        out[g.tail(e, o)]++;
        in[g.head(e, o)]++;
    }
    for (int i = 0; i < g.num_ends(); ++i) {
        if (xsign[i] > 0)
            in[g.end_vertex[i]]++;
        else
            out[g.end_vertex[i]]++;
    }
    for (int v = 0; v < r; ++v)
        if (in[v] == 0 || out[v] == 0) return false;
    return true;
}

std::vector<OrientMask> valid_orientations(const XGraph& g, const Profile& x) {
    require_valid_profile(x);
    if (static_cast<int>(x.size()) != g.num_ends())
        throw std::invalid_argument("profile length does not match ends");
    std::vector<int> xsign = end_signs(x);
    std::vector<OrientMask> out;
    const OrientMask limit = OrientMask{1} << g.num_edges();
    for (OrientMask o = 0; o < limit; ++o)
        if (orientation_no_sink_source(g, o, xsign) && orientation_acyclic(g, o))
            out.push_back(o);
    return out;
}

long long count_linear_extensions(int n, const std::vector<std::pair<int, int>>& less_than) {
    std::vector<std::uint32_t> pred(n, 0);
    for (auto [a, b] : less_than) pred[b] |= std::uint32_t{1} << a;
    const std::uint32_t full = (n >= 32) ? ~0u : (std::uint32_t{1} << n) - 1;
    if (n > 20) throw SizeLimit("linear extension count limited to 20 vertices");
    std::vector<long long> f(std::size_t{1} << n, 0);
    f[0] = 1;
    for (std::uint32_t s = 0; s < full; ++s) {
        if (f[s] == 0) continue;
        for (int v = 0; v < n; ++v)
            if (!(s >> v & 1u) && (pred[v] & ~s) == 0) f[s | (1u << v)] += f[s];
    }
    return f[full];
}

long long linear_extension_count(const XGraph& g, OrientMask o) {
    std::vector<std::pair<int, int>> rel;
    for (int e = 0; e < g.num_edges(); ++e) rel.emplace_back(g.tail(e, o), g.head(e, o));
    return count_linear_extensions(g.num_vertices, rel);
}

} // namespace hc
