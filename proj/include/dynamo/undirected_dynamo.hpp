#pragma once

#include <cstdint>

#include "dynamo/coloring.hpp"
#include "dynamo/graph.hpp"

namespace dynamo {

// Two-sided vertex partition (S, V \ S) of an undirected graph.
struct Cut {
    std::vector<char> in_s;  // one flag per vertex, true = on the S side

    int size() const { return static_cast<int>(in_s.size()); }
};

Cut cut_from_set(const Graph& g, const VertexSet& s);
VertexSet cut_side(const Cut& c, bool s_side);

// Number of edges with endpoints on opposite sides.
std::int64_t cut_edge_count(const Graph& g, const Cut& c);

struct ProperReport {
    bool proper = true;
    VertexSet violators;  // vertices with more same-side than opposite neighbors
};

// A cut is proper when no vertex has strictly more neighbors on its own side.
ProperReport is_proper(const Graph& g, const Cut& c);

// Local search: while some vertex has more same-side than opposite
// neighbors, flip the smallest such id. Every flip strictly increases the
// cut size, so at most |E| flips happen. Proper inputs are returned
// unchanged. Throws PreconditionError on isolated vertices.
Cut make_proper(const Graph& g, Cut c);

// A vertex is bad w.r.t. a cut when it has equally many neighbors on both
// sides; a connected component of G[S] or G[V \ S] is bad when all of its
// vertices are.
struct BadComponentReport {
    std::vector<VertexSet> bad_in_s;     // B(S)
    std::vector<VertexSet> bad_in_co_s;  // B(V \ S)
    std::vector<char> bad_vertex;        // per-vertex flags

    std::size_t total() const { return bad_in_s.size() + bad_in_co_s.size(); }
};

BadComponentReport bad_components(const Graph& g, const Cut& c);

// Cut potential psi(S, v*) = e(S, V\S) * n^2 - sum of d(v*, component) over
// all bad components of both sides. Gaining one cut edge always dominates
// any change in the distance sums. Requires a connected graph.
std::int64_t psi(const Graph& g, const Cut& c, VertexId v_star);

struct RefinedCut {
    Cut cut;
    long iterations = 0;                   // potential-increasing rounds
    std::vector<std::int64_t> psi_trace;   // psi after each round, strictly increasing
};

// Produces a proper cut with at most one bad component across both sides by
// repeatedly moving a closest-to-v* vertex out of a bad component avoiding
// v* (v* is fixed to vertex 0) and restoring properness. Every round
// strictly increases psi; the lemma-level facts (cut size invariance of
// bad-vertex moves, bad-component containment after a move) are checked at
// runtime. Requires a connected graph with n >= 2.
RefinedCut refine_cut(const Graph& g);

struct UndirectedDynamoResult {
    VertexSet seeds;
    long iterations = 0;
    std::vector<std::vector<std::int64_t>> psi_traces;  // one per component
};

// Strict-majority dynamo of size at most ceil(n/2) per connected component.
// From the refined cut, one vertex x of the unique bad component (vertex 0
// when there is none) is added to both sides; both are verified dynamos and
// the smaller one is returned (ties go to the side containing vertex 0).
// Disconnected inputs are handled per component; single-vertex components
// are rejected because the coloring process needs positive indegrees.
UndirectedDynamoResult find_dynamo_undirected(const Graph& g);

}  // namespace dynamo
