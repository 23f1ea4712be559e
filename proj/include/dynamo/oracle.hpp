#pragma once

#include <cstdint>

#include "dynamo/coloring.hpp"
#include "dynamo/graph.hpp"

namespace dynamo {

struct OracleResult {
    int optimum_size = -1;  // -1 when the budget was exhausted
    VertexSet witness;
    std::uint64_t subsets_examined = 0;
    bool budget_exhausted = false;

    bool found() const { return !budget_exhausted; }
};

// Hard cap for the bitmask enumerations below.
inline constexpr int kOracleMaxVertices = 64;

// Exhaustive minimum-dynamo search: subsets are enumerated by increasing
// cardinality and, within a cardinality, by increasing bitmask value, so the
// first hit is the canonical witness. Sets budget_exhausted when no dynamo
// of size <= max_size exists. Throws PreconditionError on zero-indegree
// vertices or n > 64.
OracleResult min_dynamo_bruteforce(const Graph& g, const ThresholdScenario& s, int max_size);

// Exact minimum dominating set by the same enumeration (V always dominates,
// so the search always succeeds). Undirected graphs only, n <= 64.
OracleResult min_domset_bruteforce(const Graph& g);

}  // namespace dynamo
