#ifndef HC_GRAPHS_HPP
#define HC_GRAPHS_HPP

#include "hc/numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hc {

/// Bit e set = internal edge e runs against its reference orientation.
using OrientMask = std::uint32_t;
/// Bit i set = end with label i+1 belongs to the subset.
using EndSet = std::uint32_t;

/// Connected trivalent graph with labeled ends attached to internal vertices.
/// Edges carry a fixed reference orientation (tail < head after
/// canonicalization); multi-edges allowed, self-loops rejected by validate().
struct XGraph {
    int genus = 0;
    int num_vertices = 0;                       // internal vertices 0..r-1
    std::vector<int> end_vertex;                // end i (label i+1) -> vertex
    std::vector<std::pair<int, int>> edges;     // internal edges, reference (tail, head)

    int num_ends() const { return static_cast<int>(end_vertex.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    int tail(int e, OrientMask o) const { return (o >> e) & 1u ? edges[e].second : edges[e].first; }
    int head(int e, OrientMask o) const { return (o >> e) & 1u ? edges[e].first : edges[e].second; }

    /// Builds and validates; sorts edges into the canonical reference order.
    static XGraph make(int genus, std::vector<int> end_vertex,
                       std::vector<std::pair<int, int>> edges);
    void validate() const;

    /// Lexicographically minimal encoding over internal-vertex relabelings.
    std::vector<int> canonical_key() const;
    /// Same graph with end labels permuted: new end i+1 = old end perm[i]+1.
    XGraph relabel_ends(const std::vector<int>& perm) const;
};

/// One x-graph per isomorphism class fixing end labels. Loop-free; graphs
/// with a bridge whose one side carries no ends are dropped (they admit no
/// valid orientation, so their contribution is identically zero).
std::vector<XGraph> enumerate_xgraphs(int g, int n);

/// Order of the automorphism group fixing every labeled end
/// (vertex permutations times permutations of parallel edges).
long long automorphism_count(const XGraph& g);

/// Signs of the end values; used to direct the end edges.
std::vector<int> end_signs(const Profile& x);

bool orientation_acyclic(const XGraph& g, OrientMask o);
/// No internal vertex has all its incident edges (ends included) pointing in,
/// or all pointing out.
bool orientation_no_sink_source(const XGraph& g, OrientMask o, const std::vector<int>& xsign);

/// The acyclic, internally sink/source-free orientations for the sign pattern
/// of x; these label the candidate bounded F-chambers.
std::vector<OrientMask> valid_orientations(const XGraph& g, const Profile& x);

/// Linear extensions of the vertex order induced by the directed internal
/// edges; 0 when the orientation has a directed cycle.
long long linear_extension_count(const XGraph& g, OrientMask o);

/// Linear extensions of an arbitrary relation set on n elements.
long long count_linear_extensions(int n, const std::vector<std::pair<int, int>>& less_than);

} // namespace hc

#endif
