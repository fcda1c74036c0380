#ifndef HC_CUTS_HPP
#define HC_CUTS_HPP

#include "hc/flows.hpp"
#include "hc/graphs.hpp"
#include "hc/hurwitz.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace hc {

/// An I-cut of a directed x-graph: removing its edges splits the graph so
/// that the I-ends and the I^c-ends sit on two distinct components, every
/// cut edge joins different components, and the component digraph is acyclic
/// with the I-component initial and the I^c-component final.
struct Cut {
    std::uint32_t edges = 0;
    int ncomp = 1;
    int rank = 0;                 // components - 1
    std::vector<int> comp;        // vertex -> component id
    int comp_top = -1;            // component carrying the I ends
    int comp_bottom = -1;         // component carrying the I^c ends
};

struct CutPoset {
    const XGraph* graph = nullptr;
    OrientMask orient = 0;
    EndSet subset = 0;
    std::vector<Cut> cuts;        // empty cut first, then by (popcount, mask)
    std::uint32_t cuttable = 0;

    bool has_nonempty() const { return cuts.size() > 1; }
    const Cut* find(std::uint32_t edges) const;
    /// Cover relations (indices into cuts).
    std::vector<std::pair<int, int>> hasse() const;
};

CutPoset cuts_poset(const XGraph& g, OrientMask o, EndSet I);
bool is_appearing(const XGraph& g, OrientMask o, EndSet I);

/// Formal integer combination of orientations.
using OrientSum = std::map<OrientMask, long long>;

/// Signed reversal expansion of the connection adjoint applied to the
/// orientation A: sum over cuts C and subsets E of C of
/// (-1)^{rk C} (-1)^{|E|} [A with E reversed], aggregated per orientation.
OrientSum gm_adjoint_raw(const XGraph& g, OrientMask a, EndSet I);

/// Strict feasibility of the open chamber: some real conservative flow is
/// positive along every edge of the orientation (Fourier-Motzkin).
bool orientation_geometric(const XGraph& g, const FlowBasis& basis, OrientMask o,
                           const Profile& x);

/// All orientations realized by flows over x (chambers of the arrangement,
/// unbounded included) in increasing mask order.
std::vector<OrientMask> geometric_chambers(const XGraph& g, const Profile& x);
/// The bounded chambers: geometric and acyclic.
std::vector<OrientMask> bounded_chambers(const XGraph& g, const Profile& x);

/// The chamber transport matrix across a wall, computed through a cone
/// basis: each side-1 chamber is expanded over cones, cones map to
/// themselves, and the image is re-read over side-2 chambers.
struct GmTransport {
    std::vector<OrientMask> ch1, ch2;
    std::vector<std::vector<long long>> matrix; // ch2 x ch1
    long long entry(OrientMask a2, OrientMask b1) const;
};

GmTransport gm_via_cones(const XGraph& g, EndSet I, const Profile& x1, const Profile& x2);

struct ConnectionReport {
    bool cone_preservation = true;       // connection fixes combinatorial cones
    bool sink_source_vanish = true;      // sink/source orientations pair to zero
    bool distinct_chambers_vanish = true;// other side-2 chambers pair to zero
    bool off_side_vanish = true;         // bounded orientations on neither side
    int cones_checked = 0;
    bool all() const {
        return cone_preservation && sink_source_vanish && distinct_chambers_vanish &&
               off_side_vanish;
    }
};

ConnectionReport graph_connection_checks(const XGraph& g, EndSet I, const Profile& x1,
                                         const Profile& x2);

/// Vertex orderings of the graph with the cut edges removed.
long long order_count(const XGraph& g, OrientMask o, std::uint32_t cut_edges);

/// Edges of C bordering the two end components of C.
std::uint32_t induced_thin_cut(const XGraph& g, const Cut& c);
bool cut_is_thin(const XGraph& g, const Cut& c);
std::vector<int> thin_cut_indices(const CutPoset& poset);

/// Per nonempty thin cut T with t middle vertices:
///   (-1)^t o(T) = - sum_{C : t(C) = T} (-1)^{rk C} o(C).
bool thin_cut_reduction_check(const XGraph& g, OrientMask o, EndSet I);

/// Pointwise cone identity behind the thin-cut reduction: on the middle
/// arrangement, sum_{C in P(T)} (-1)^{rk C} 1[K_C] = -(-1)^t 1[X^op]
/// at generic sample points.
bool cone_indicator_check(const XGraph& g, OrientMask o, EndSet I, int samples,
                          std::uint64_t seed);

/// m(A) - sum_B m(B) <B, adjoint(A)> over bounded side-1 chambers B.
long long wc_k(const XGraph& g, OrientMask a, EndSet I, const Profile& x1);
/// sign(A) * wc_k: the per-chamber wall-crossing coefficient.
long long wc_coefficient(const XGraph& g, OrientMask a, EndSet I, const Profile& x1,
                         const Profile& x2);

/// Per-graph wall-crossing value at a side-2 point:
/// sum_A wc_k(A) * chamber_sum(A, eval_at) / |Aut|.
Rat wc_graph_value(const XGraph& g, EndSet I, const Profile& x1, const Profile& eval_at);

/// Wall crossing assembled over all graphs from the connection coefficients.
Rat wc_eq9_value(HurwitzEngine& engine, int genus, EndSet I, const Profile& x1,
                 const Profile& eval_at);

} // namespace hc

#endif
