#ifndef HC_FLOWS_HPP
#define HC_FLOWS_HPP

#include "hc/graphs.hpp"
#include "hc/numeric.hpp"

#include <vector>

namespace hc {

/// Affine parametrization of the conservative flows on an x-graph:
/// w'(e) = sum_i x_coeff[e][i] * x_i  +  sum_k c_coeff[e][k] * c_k,
/// where c ranges over the g cycle coordinates. Substituting any c gives a
/// vector satisfying conservation at every internal vertex.
struct FlowBasis {
    int cycles = 0;                                  // g
    std::vector<std::vector<long long>> x_coeff;     // per edge, length n
    std::vector<std::vector<long long>> c_coeff;     // per edge, length g
    std::vector<int> tree_edges;
    std::vector<int> cotree_edges;                   // edge of cycle k = cotree_edges[k]

    long long eval_x_part(int e, const Profile& x) const;
    long long eval(int e, const Profile& x, const std::vector<long long>& c) const;
};

/// Spanning-tree parametrization. variant selects a different tree
/// (different root and edge preference) for basis-independence tests.
FlowBasis flow_parametrization(const XGraph& g, int variant = 0);

/// Integer flows strictly positive along every edge of the orientation:
/// the interior lattice points of the open F-chamber. Entries are the signed
/// weights w' relative to the reference orientation. Complete for acyclic
/// orientations, whose flows are bounded by the cover degree; circulating
/// orientations have unbounded chambers and only the points inside the
/// degree box are produced.
std::vector<std::vector<long long>> lattice_flows(const XGraph& g, const FlowBasis& basis,
                                                  OrientMask o, const Profile& x);

/// Sum over the chamber's lattice flows of the product of edge weight
/// magnitudes (exact).
Int chamber_sum(const XGraph& g, OrientMask o, const Profile& x);

/// S_Gamma(x) = (1/|Aut|) * sum over valid orientations of m(O) * chamber sum.
Rat graph_contribution(const XGraph& g, const Profile& x);

} // namespace hc

#endif
