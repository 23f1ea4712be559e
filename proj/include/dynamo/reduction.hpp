#pragma once

#include <cstdint>
#include <utility>

#include "dynamo/coloring.hpp"
#include "dynamo/graph.hpp"

namespace dynamo {

// Roles of gadget vertices. For a source graph G(V, E) the gadget consists
// of the source vertices V, one hub w_v per source vertex, pendant sets
// X_v and Y_v of size deg(v) each, the collectors z1, z2 and the pendants
// g1, g2. Gadget ids are laid out canonically: V, then W, then X grouped by
// owner, then Y grouped by owner, then z1, z2, g1, g2.
enum class GadgetRole { V, W, X, Y, Z1, Z2, G1, G2 };

std::string to_string(GadgetRole role);

struct GadgetVertex {
    GadgetRole role = GadgetRole::V;
    VertexId owner = -1;  // source vertex for V/W/X/Y
    int index = 0;        // 1-based position for X/Y
};

// Ownership table linking gadget vertices back to the source instance.
struct GadgetMap {
    Graph source;
    std::vector<GadgetVertex> roles;  // indexed by gadget id
    std::vector<int> x_base;          // first X id per source vertex
    std::vector<int> y_base;          // first Y id per source vertex
    VertexId z1 = -1, z2 = -1, g1 = -1, g2 = -1;

    int gadget_size() const { return static_cast<int>(roles.size()); }
    VertexId w_id(VertexId v) const { return source.n + v; }
    VertexId x_id(VertexId v, int i) const { return x_base[v] + i - 1; }
    VertexId y_id(VertexId v, int i) const { return y_base[v] + i - 1; }
};

// Builds the gadget for an undirected source without isolated vertices.
// |gadget| = 2n + 4m + 4 and every gadget degree is odd.
std::pair<Graph, GadgetMap> build_gadget(const Graph& source);

// Maps a dominating set D of the source to the gadget dynamo D + {z1, z2}.
// Throws CertificateError if D does not dominate; the returned set is
// re-verified as a strict-majority dynamo of the gadget.
VertexSet domset_to_dynamo(const GadgetMap& map, const VertexSet& domset);

// Extracts the dominating set {u | seeds meet {w_u, u} + X_u} from a
// strict-majority dynamo of the gadget. Throws CertificateError when the
// seeds are not a dynamo; the result dominates and is never larger than the
// input.
VertexSet dynamo_to_domset(const GadgetMap& map, const VertexSet& seeds);

// Blocking set B_v = {w_v} + N*(v) + union of X_u over u in N*(v), as
// gadget ids. Every gadget dynamo intersects every B_v.
VertexSet blocking_set(const GadgetMap& map, VertexId v);

// Standard greedy cover heuristic: repeatedly takes the vertex dominating
// the most still-undominated vertices, ties to the lowest id.
VertexSet greedy_domset(const Graph& g);

bool is_dominating(const Graph& g, const VertexSet& d);

// Smallest vertex left undominated by d, or -1 if d dominates.
VertexId first_undominated(const Graph& g, const VertexSet& d);

struct GadgetCheckReport {
    bool bipartite_by_roles = false;  // V+Y+{g1,g2} vs X+W+{z1,z2}
    bool z1_eccentricity_ok = false;  // every vertex within distance 4 of z1
    int z1_eccentricity = 0;
    bool degrees_all_odd = false;
    bool vertex_formula_ok = false;   // |gadget| = 2n + 4m + 4
    bool edge_formula_ok = false;     // |edges| = 10m + n + 2
    bool closures_coincide = false;   // strict vs simple from sampled seed sets
    int closure_trials = 0;

    bool all_ok() const {
        return bipartite_by_roles && z1_eccentricity_ok && degrees_all_odd &&
               vertex_formula_ok && edge_formula_ok && closures_coincide;
    }
};

// Re-derives the structural facts from the finished gadget. The strict vs
// simple comparison samples `trials` pseudo-random seed sets (odd degrees
// make the two scenarios coincide).
GadgetCheckReport check_gadget_invariants(const Graph& gadget, const GadgetMap& map,
                                          int trials = 20, std::uint64_t seed = 1);

// Map file format: one line per gadget vertex,
//   <gadget-id> <role> [<owner> [<index>]]
// ordered by gadget id; role in {V, W, X, Y, Z1, Z2, G1, G2}.
std::string serialize_gadget_map(const GadgetMap& map);

// Parses and validates a map file against the canonical layout for the
// given source graph. Throws ParseError on malformed or inconsistent lines.
GadgetMap parse_gadget_map(const std::string& text, const Graph& source);

}  // namespace dynamo
