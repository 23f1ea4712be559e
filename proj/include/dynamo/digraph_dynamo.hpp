#pragma once

#include <cstdint>

#include "dynamo/coloring.hpp"
#include "dynamo/graph.hpp"

namespace dynamo {

// A (k+1)-block partition of the vertex set; empty blocks are allowed.
struct Partition {
    int k = 1;
    std::vector<VertexSet> blocks;  // exactly k+1 disjoint sorted sets covering V
};

// V_1 = V, all other blocks empty.
Partition initial_partition(const Graph& g, int k);

// Throws std::invalid_argument unless p is a valid (k+1)-partition of V(g).
void check_partition(const Graph& g, const Partition& p);

// Potential of a partition: sum over blocks of |c(V \ V_i)| under the
// k/(k+1) threshold. Lies in [k*n, (k+1)*n] and is maximal exactly when
// every complement V \ V_i is a dynamo.
std::int64_t eta(const Graph& g, const Partition& p);

// One potential-increasing move: picks the smallest block index i* whose
// block is not contained in the closure of its complement, the smallest
// uncolored vertex v in it, and the block j* != i* minimizing
// |N_in(v) & V_j| (ties to the smallest index), then moves v from i* to j*.
// The chosen j* provably satisfies |N_in(v) & V_j*| < deg_in(v)/(k+1); this
// is asserted at runtime. Throws std::logic_error when eta is already
// maximal.
Partition refine_step(const Graph& g, const Partition& p);

struct DirectedDynamoResult {
    VertexSet seeds;
    int iterations = 0;  // refine_step applications
};

// Runs the refinement loop from the initial partition until eta is maximal,
// then returns the smallest complement V \ V_i. The result is a verified
// k/(k+1) dynamo of size at most floor(k*n/(k+1)); the loop performs at most
// (k+1)*n moves. Throws PreconditionError on zero-indegree vertices.
DirectedDynamoResult find_dynamo_directed(const Graph& g, int k);

}  // namespace dynamo
