#pragma once

#include <string>

#include "dynamo/graph.hpp"

namespace dynamo {

// Activation threshold as a function of indegree. Three variants:
//   strict majority    required(d) = ceil((d+1)/2)   (more than half white)
//   simple majority    required(d) = ceil(d/2)       (at least half white)
//   fraction k/(k+1)   required(d) = ceil(d*k/(k+1))
// The fractional test is evaluated in exact integer arithmetic,
// white*(k+1) >= d*k, so no floating point is involved.
struct ThresholdScenario {
    enum class Kind { Strict, Simple, Fraction };

    Kind kind = Kind::Strict;
    int k = 0;  // Fraction only, k >= 1

    static ThresholdScenario strict_majority() { return {Kind::Strict, 0}; }
    static ThresholdScenario simple_majority() { return {Kind::Simple, 0}; }
    static ThresholdScenario fraction(int k);

    // Smallest white in-neighbor count that colors a vertex of the given
    // indegree. Throws std::invalid_argument for indegree < 1.
    int required(int indegree) const;

    // Exact activation test: does `white` white in-neighbors out of
    // `indegree` color the vertex?
    bool activates(int white, int indegree) const;

    std::string name() const;
};

struct Activation {
    VertexId vertex;
    int white_in_neighbors;  // count that triggered the activation
};

// Fixed point of the coloring process together with a replayable certificate.
// Every traced vertex was colored after at least `white_in_neighbors` of its
// in-neighbors were white, and white = seeds + traced vertices.
struct ColoringResult {
    VertexSet white;
    std::vector<Activation> trace;
    VertexSet seeds;

    bool covers(const Graph& g) const { return static_cast<int>(white.size()) == g.n; }
};

// Computes c(S, G, phi): queue-driven propagation with one white-in-neighbor
// counter per vertex, O(n + m). The fixed point is independent of processing
// order; the FIFO queue seeded in ascending id order makes the trace
// reproducible. Throws PreconditionError if some vertex has indegree 0.
ColoringResult closure(const Graph& g, const VertexSet& seeds, const ThresholdScenario& s);

// True iff the closure colors every vertex.
bool is_dynamo(const Graph& g, const VertexSet& seeds, const ThresholdScenario& s);

}  // namespace dynamo
