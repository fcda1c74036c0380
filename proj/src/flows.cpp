#include "hc/flows.hpp"

#include <algorithm>
#include <stdexcept>

namespace hc {

long long FlowBasis::eval_x_part(int e, const Profile& x) const {
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x_coeff[e][i] * x[i];
    return s;
}

long long FlowBasis::eval(int e, const Profile& x, const std::vector<long long>& c) const {
    long long s = eval_x_part(e, x);
    for (int k = 0; k < cycles; ++k) s += c_coeff[e][k] * c[k];
    return s;
}

FlowBasis flow_parametrization(const XGraph& g, int variant) {
    const int r = g.num_vertices;
    const int m = g.num_edges();
    const int n = g.num_ends();

    // BFS spanning tree
    const int root = variant % std::max(1, r);
    std::vector<int> parent_edge(r, -1), order;
    std::vector<bool> in_tree_vertex(r, false);
    in_tree_vertex[root] = true;
    order.push_back(root);
    std::vector<bool> edge_in_tree(m, false);
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        for (int pass = 0; pass < m; ++pass) {
            // variant flips the scan direction so a different tree is chosen
            int e = (variant / 2) % 2 == 0 ? pass : m - 1 - pass;
            auto [a, b] = g.edges[e];
            int w = -1;
            if (a == v && !in_tree_vertex[b]) w = b;
            if (b == v && !in_tree_vertex[a]) w = a;
            if (w < 0) continue;
            in_tree_vertex[w] = true;
            parent_edge[w] = e;
            edge_in_tree[e] = true;
            order.push_back(w);
        }
    }

    FlowBasis basis;
    basis.cycles = g.genus;
    basis.x_coeff.assign(m, std::vector<long long>(n, 0));
    basis.c_coeff.assign(m, std::vector<long long>(g.genus, 0));
    for (int e = 0; e < m; ++e)
        if (edge_in_tree[e])
            basis.tree_edges.push_back(e);
        else
            basis.cotree_edges.push_back(e);
    if (static_cast<int>(basis.cotree_edges.size()) != g.genus)
        throw std::logic_error("cycle rank mismatch");

    // Particular flow: cotree weights 0; tree edge weight = net end inflow of
    // the subtree it hangs from, signed by the reference direction.
    // subtree_x[v][i]: coefficient of x_i entering through the subtree at v.
    std::vector<std::vector<long long>> subtree(r, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) subtree[g.end_vertex[i]][i] += 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (v == root) continue;
        int e = parent_edge[v];
        auto [a, b] = g.edges[e];
        int p = (a == v) ? b : a;
        // flow v -> p equals subtree inflow at v
        for (int i = 0; i < n; ++i) {
            long long coef = subtree[v][i];
            basis.x_coeff[e][i] = (g.edges[e].first == v) ? coef : -coef;
            subtree[p][i] += coef;
        }
    }

    // Fundamental cycles: +1 on the cotree edge, +-1 along the tree path
    // closing it (from head back to tail).
    std::vector<int> depth(r, 0);
    for (std::size_t qi = 1; qi < order.size(); ++qi) {
        int v = order[qi];
        auto [a, b] = g.edges[parent_edge[v]];
        depth[v] = depth[a == v ? b : a] + 1;
    }
    for (int k = 0; k < g.genus; ++k) {
        int f = basis.cotree_edges[k];
        basis.c_coeff[f][k] = 1;
        int u = g.edges[f].second, w = g.edges[f].first; // walk head -> tail
        while (u != w) {
            int *deep = depth[u] >= depth[w] ? &u : &w;
            long long dir = (deep == &u) ? 1 : -1; // along flow direction head->tail
            int e = parent_edge[*deep];
            int v = *deep;
            auto [a, b] = g.edges[e];
            int p = (a == v) ? b : a;
            // traversing from v to p; cycle circulates head -> tail of f
            basis.c_coeff[e][k] += (g.edges[e].first == v ? 1 : -1) * dir;
            *deep = p;
        }
    }
    return basis;
}

std::vector<std::vector<long long>> lattice_flows(const XGraph& g, const FlowBasis& basis,
                                                  OrientMask o, const Profile& x) {
    require_valid_profile(x);
    const int m = g.num_edges();
    const long long d = profile_degree(x);
    std::vector<long long> base(m);
    for (int e = 0; e < m; ++e) base[e] = basis.eval_x_part(e, x);
    std::vector<int> sign(m);
    for (int e = 0; e < m; ++e) sign[e] = (o >> e & 1u) ? -1 : 1;

    std::vector<std::vector<long long>> flows;
    std::vector<long long> c(basis.cycles, -d);
    auto check_point = [&]() {
        std::vector<long long> w(m);
        for (int e = 0; e < m; ++e) {
            w[e] = base[e];
            for (int k = 0; k < basis.cycles; ++k) w[e] += basis.c_coeff[e][k] * c[k];
            if (sign[e] * w[e] < 1) return;
        }
        flows.push_back(std::move(w));
    };
    if (basis.cycles == 0) {
        check_point();
        return flows;
    }
    while (true) {
        check_point();
        int k = 0;
        while (k < basis.cycles && c[k] == d) {
            c[k] = -d;
            ++k;
        }
        if (k == basis.cycles) break;
        ++c[k];
    }
    return flows;
}

Int chamber_sum(const XGraph& g, OrientMask o, const Profile& x) {
    FlowBasis basis = flow_parametrization(g);
    auto flows = lattice_flows(g, basis, o, x);
    Int total = 0;
    for (auto& w : flows) {
        Int prod = 1;
        for (long long v : w) prod *= to_int(v < 0 ? -v : v);
        total += prod;
    }
    return total;
}

Rat graph_contribution(const XGraph& g, const Profile& x) {
    Int acc = 0;
    for (OrientMask o : valid_orientations(g, x)) {
        long long m = linear_extension_count(g, o);
        if (m == 0) continue;
        acc += to_int(m) * chamber_sum(g, o, x);
    }
    Rat s(acc);
    s /= to_rat(automorphism_count(g));
    s.canonicalize();
    return s;
}

} // namespace hc
