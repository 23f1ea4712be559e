#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dynamo {

using VertexId = int;

// Always sorted ascending, no duplicates.
using VertexSet = std::vector<VertexId>;

// Raised when an input file cannot be parsed; carries the 1-based line number
// the problem was detected on.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// Raised when an operation is invoked on an input that violates its
// precondition (zero-indegree vertex, disconnected graph, oracle cap, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a witness handed to a converter fails its defining predicate
// (a non-dominating set, a seed set that is not a dynamo).
class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple graph over dense vertex ids 0..n-1. Undirected graphs are stored as
// symmetric adjacency; in_adj is always the transpose of out_adj, and for
// undirected graphs the two coincide. Adjacency lists are kept sorted.
// Graphs are immutable after construction and safe to share across threads.
struct Graph {
    int n = 0;
    bool directed = false;
    std::vector<VertexSet> out_adj;
    std::vector<VertexSet> in_adj;

    int edge_count() const;  // undirected edges counted once

    int out_degree(VertexId v) const { return static_cast<int>(out_adj[v].size()); }
    int in_degree(VertexId v) const { return static_cast<int>(in_adj[v].size()); }

    // Undirected neighborhood N(v); for digraphs these are the out-neighbors.
    const VertexSet& neighbors(VertexId v) const { return out_adj[v]; }

    bool has_edge(VertexId u, VertexId v) const;
};

// Builds a graph from an edge list, enforcing simplicity. For undirected
// graphs each edge is given once in either orientation. Throws
// std::invalid_argument on out-of-range ids, self-loops or duplicates.
Graph make_graph(int n, bool directed, const std::vector<std::pair<VertexId, VertexId>>& edges);

struct Diagnostics {
    bool is_simple = true;
    int min_indegree = 0;
    bool is_connected = true;  // underlying undirected connectivity
    VertexSet isolated_vertices;
};

// Recomputes structural facts from scratch; pure reporting, never throws.
Diagnostics validate(const Graph& g);

// Graph file format:
//   # comment lines start with '#' and may appear anywhere
//   p <directed|undirected> <n> <m>
//   e <u> <v>        (exactly m lines; undirected edges appear once)
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// Vertex-set file format: one decimal id per line, '#' comments allowed.
// Ids are validated against n; duplicates collapse into the set.
VertexSet parse_vertex_set(const std::string& text, int n);
std::string serialize_vertex_set(const VertexSet& s);

enum class GraphFamily { Complete, Cycle, Path, GridTorus, RandomGnp, RandomDigraph };

GraphFamily graph_family_from_string(const std::string& name);
std::string to_string(GraphFamily family);

struct GenSpec {
    GraphFamily family = GraphFamily::Complete;
    int n = 0;             // complete, cycle, path, random-gnp, random-digraph
    int rows = 0;          // grid-torus
    int cols = 0;          // grid-torus
    double p = 0.0;        // edge probability of the random families
    bool directed = false; // orientation of cycle and path
};

// Deterministic for a fixed seed. Random digraphs are repaired so that every
// vertex has indegree >= 1 (one extra arc from a random other vertex).
// Throws std::invalid_argument on parameters invalid for the family.
Graph generate(const GenSpec& spec, std::uint64_t seed);

inline constexpr int kUnreachable = -1;

// Edge-count distances from source along out-edges; kUnreachable marks
// vertices with no path from source.
std::vector<int> bfs_distances(const Graph& g, VertexId source);

// Connected components of G[subset] for an undirected graph. Components are
// sorted internally and listed by smallest member.
std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& subset);

// Relabels subset (which must be sorted) to 0..|subset|-1, keeping order.
// Used by algorithms that dispatch per connected component.
Graph induced_subgraph(const Graph& g, const VertexSet& subset);

}  // namespace dynamo
