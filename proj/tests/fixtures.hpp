#ifndef HC_TEST_FIXTURES_HPP
#define HC_TEST_FIXTURES_HPP

#include "hc/graphs.hpp"

namespace hc::fixtures {

/// Two vertices joined by a doubled edge, one end on each (genus 1, n = 2).
inline XGraph wiener() {
    return XGraph::make(1, {0, 1}, {{0, 1}, {0, 1}});
}

/// Six-vertex genus-2 graph with ends x1, x3 on vertex 0, x2 on vertex 4,
/// x4 on vertex 5. Its flow forms in a suitable basis are
/// {x1+x3, i, j, j+i-x2, -x4-i-j, -x4-j, j-x2}.
inline XGraph two_loop_n4() {
    return XGraph::make(2, {0, 4, 0, 5},
                        {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
}

/// Chain v0(x1,x2) - v1 == v2 - v3(x3,x4) with a doubled middle edge
/// (genus 1, n = 4).
inline XGraph dumbbell_chain() {
    return XGraph::make(1, {0, 0, 3, 3}, {{0, 1}, {1, 2}, {1, 2}, {2, 3}});
}

/// Two 3-vertex chains with ends at the chain endpoints (x1, x3 above,
/// x2, x4 below), joined by one vertical edge per vertex; the unique
/// nonempty {1,3}-cut is the set of three vertical edges (genus 2, n = 4).
inline XGraph simple_cut_pair_of_chains() {
    return XGraph::make(2, {0, 3, 2, 5},
                        {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

/// Genus-1 tadpole with a self-loop; invalid as an enumerated x-graph but
/// useful to confirm a loop kills every orientation. Built without
/// validation.
inline XGraph loop_tadpole() {
    XGraph g;
    g.genus = 1;
    g.num_vertices = 2;
    g.end_vertex = {0, 0};
    g.edges = {{0, 1}, {1, 1}};
    return g;
}

} // namespace hc::fixtures

#endif
