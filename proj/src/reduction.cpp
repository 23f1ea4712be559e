#include "dynamo/reduction.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace dynamo {

std::string to_string(GadgetRole role) {
    switch (role) {
        case GadgetRole::V: return "V";
        case GadgetRole::W: return "W";
        case GadgetRole::X: return "X";
        case GadgetRole::Y: return "Y";
        case GadgetRole::Z1: return "Z1";
        case GadgetRole::Z2: return "Z2";
        case GadgetRole::G1: return "G1";
        case GadgetRole::G2: return "G2";
    }
    return "?";
}

namespace {

GadgetMap layout_map(const Graph& source) {
    GadgetMap map;
    map.source = source;
    const int n = source.n;
    map.x_base.resize(n);
    map.y_base.resize(n);
    int next = 2 * n;
    for (int v = 0; v < n; ++v) {
        map.x_base[v] = next;
        next += source.out_degree(v);
    }
    for (int v = 0; v < n; ++v) {
        map.y_base[v] = next;
        next += source.out_degree(v);
    }
    map.z1 = next++;
    map.z2 = next++;
    map.g1 = next++;
    map.g2 = next++;

    map.roles.resize(next);
    for (int v = 0; v < n; ++v) {
        map.roles[v] = {GadgetRole::V, v, 0};
        map.roles[map.w_id(v)] = {GadgetRole::W, v, 0};
        for (int i = 1; i <= source.out_degree(v); ++i) {
            map.roles[map.x_id(v, i)] = {GadgetRole::X, v, i};
            map.roles[map.y_id(v, i)] = {GadgetRole::Y, v, i};
        }
    }
    map.roles[map.z1] = {GadgetRole::Z1, -1, 0};
    map.roles[map.z2] = {GadgetRole::Z2, -1, 0};
    map.roles[map.g1] = {GadgetRole::G1, -1, 0};
    map.roles[map.g2] = {GadgetRole::G2, -1, 0};
    return map;
}

}  // namespace

std::pair<Graph, GadgetMap> build_gadget(const Graph& source) {
    if (source.directed) throw std::invalid_argument("the gadget is built from an undirected graph");
    for (int v = 0; v < source.n; ++v)
        if (source.out_degree(v) == 0)
            throw PreconditionError("vertex " + std::to_string(v) +
                                    " is isolated; the gadget needs deg >= 1 everywhere");

    GadgetMap map = layout_map(source);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int v = 0; v < source.n; ++v) {
        const int deg = source.out_degree(v);
        for (int i = 1; i <= deg; ++i) {
            edges.emplace_back(v, map.x_id(v, i));              // v - X_v
            edges.emplace_back(map.w_id(v), map.y_id(v, i));    // w_v - Y_v
            edges.emplace_back(map.y_id(v, i), map.z1);         // Y - z1
            edges.emplace_back(map.y_id(v, i), map.z2);         // Y - z2
        }
        edges.emplace_back(map.w_id(v), v);                     // w_v - N*(v)
        for (int u : source.neighbors(v)) edges.emplace_back(map.w_id(v), u);
    }
    edges.emplace_back(map.z1, map.g1);
    edges.emplace_back(map.z2, map.g2);
    Graph gadget = make_graph(map.gadget_size(), false, edges);
    return {std::move(gadget), std::move(map)};
}

bool is_dominating(const Graph& g, const VertexSet& d) {
    return first_undominated(g, d) == -1;
}

VertexId first_undominated(const Graph& g, const VertexSet& d) {
    std::vector<char> dominated(g.n, 0);
    for (int v : d) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range in dominating set");
        dominated[v] = 1;
        for (int u : g.neighbors(v)) dominated[u] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        if (!dominated[v]) return v;
    return -1;
}

VertexSet domset_to_dynamo(const GadgetMap& map, const VertexSet& domset) {
    const VertexId bad = first_undominated(map.source, domset);
    if (bad != -1)
        throw CertificateError("input does not dominate the source: vertex " +
                               std::to_string(bad) + " has no closed neighbor in the set");
    VertexSet seeds = domset;
    seeds.push_back(map.z1);
    seeds.push_back(map.z2);
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    const Graph gadget = build_gadget(map.source).first;
    if (!is_dynamo(gadget, seeds, ThresholdScenario::strict_majority()))
        throw std::logic_error("dominating set plus {z1, z2} failed dynamo verification");
    return seeds;
}

VertexSet dynamo_to_domset(const GadgetMap& map, const VertexSet& seeds) {
    const Graph gadget = build_gadget(map.source).first;
    for (int v : seeds)
        if (v < 0 || v >= gadget.n) throw std::invalid_argument("gadget seed out of range");
    if (!is_dynamo(gadget, seeds, ThresholdScenario::strict_majority())) {
        // Prefer the crisp explanation: a blocking set the seeds missed can
        // never be colored at all.
        for (int v = 0; v < map.source.n; ++v) {
            const VertexSet bv = blocking_set(map, v);
            VertexSet hit;
            std::set_intersection(seeds.begin(), seeds.end(), bv.begin(), bv.end(),
                                  std::back_inserter(hit));
            if (hit.empty())
                throw CertificateError("input is not a dynamo of the gadget: it misses the "
                                       "blocking set of source vertex " +
                                       std::to_string(v));
        }
        throw CertificateError("input is not a dynamo of the gadget: the closure is incomplete");
    }

    std::vector<char> seeded(gadget.n, 0);
    for (int v : seeds) seeded[v] = 1;
    VertexSet domset;
    for (int u = 0; u < map.source.n; ++u) {
        bool hit = seeded[u] || seeded[map.w_id(u)];
        for (int i = 1; !hit && i <= map.source.out_degree(u); ++i) hit = seeded[map.x_id(u, i)];
        if (hit) domset.push_back(u);
    }
    if (!is_dominating(map.source, domset))
        throw std::logic_error("extracted set failed domination verification");
    if (domset.size() > seeds.size())
        throw std::logic_error("extracted dominating set exceeds the dynamo size");
    return domset;
}

VertexSet blocking_set(const GadgetMap& map, VertexId v) {
    if (v < 0 || v >= map.source.n) throw std::invalid_argument("source vertex out of range");
    VertexSet bv;
    bv.push_back(map.w_id(v));
    bv.push_back(v);
    for (int u : map.source.neighbors(v)) bv.push_back(u);
    for (int u : map.source.neighbors(v))
        for (int i = 1; i <= map.source.out_degree(u); ++i) bv.push_back(map.x_id(u, i));
    for (int i = 1; i <= map.source.out_degree(v); ++i) bv.push_back(map.x_id(v, i));
    std::sort(bv.begin(), bv.end());
    return bv;
}

VertexSet greedy_domset(const Graph& g) {
    if (g.directed) throw std::invalid_argument("greedy_domset expects an undirected graph");
    for (int v = 0; v < g.n; ++v)
        if (g.out_degree(v) == 0)
            throw PreconditionError("vertex " + std::to_string(v) + " is isolated");

    std::vector<char> dominated(g.n, 0);
    int remaining = g.n;
    VertexSet result;
    while (remaining > 0) {
        int best = -1, best_gain = -1;
        for (int v = 0; v < g.n; ++v) {
            int gain = dominated[v] ? 0 : 1;
            for (int u : g.neighbors(v))
                if (!dominated[u]) ++gain;
            if (gain > best_gain) {
                best = v;
                best_gain = gain;
            }
        }
        result.push_back(best);
        auto mark = [&](int u) {
            if (!dominated[u]) {
                dominated[u] = 1;
                --remaining;
            }
        };
        mark(best);
        for (int u : g.neighbors(best)) mark(u);
    }
    std::sort(result.begin(), result.end());
    return result;
}

GadgetCheckReport check_gadget_invariants(const Graph& gadget, const GadgetMap& map, int trials,
                                          std::uint64_t seed) {
    GadgetCheckReport report;
    const int n = map.source.n;
    const int m = map.source.edge_count();

    report.vertex_formula_ok = gadget.n == 2 * n + 4 * m + 4 && gadget.n == map.gadget_size();
    report.edge_formula_ok = gadget.edge_count() == 10 * m + n + 2;

    // Every edge must join {V, Y, G1, G2} with {X, W, Z1, Z2}.
    auto side_one = [&](VertexId v) {
        const auto role = map.roles[v].role;
        return role == GadgetRole::V || role == GadgetRole::Y || role == GadgetRole::G1 ||
               role == GadgetRole::G2;
    };
    report.bipartite_by_roles = true;
    for (int u = 0; u < gadget.n; ++u)
        for (int v : gadget.neighbors(u))
            if (side_one(u) == side_one(v)) report.bipartite_by_roles = false;

    const auto dist = bfs_distances(gadget, map.z1);
    report.z1_eccentricity = 0;
    report.z1_eccentricity_ok = true;
    for (int v = 0; v < gadget.n; ++v) {
        if (dist[v] == kUnreachable) {
            report.z1_eccentricity_ok = false;
            break;
        }
        report.z1_eccentricity = std::max(report.z1_eccentricity, dist[v]);
    }
    report.z1_eccentricity_ok = report.z1_eccentricity_ok && report.z1_eccentricity <= 4;

    report.degrees_all_odd = true;
    for (int v = 0; v < gadget.n; ++v)
        if (gadget.out_degree(v) % 2 == 0) report.degrees_all_odd = false;

    // Odd degrees make the strict and simple thresholds agree vertex by
    // vertex, so closures must coincide from any seed set.
    report.closure_trials = trials;
    report.closures_coincide = true;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials && report.closures_coincide; ++t) {
        VertexSet s;
        for (int v = 0; v < gadget.n; ++v)
            if (rng() & 1u) s.push_back(v);
        const auto strict = closure(gadget, s, ThresholdScenario::strict_majority());
        const auto simple = closure(gadget, s, ThresholdScenario::simple_majority());
        if (strict.white != simple.white) report.closures_coincide = false;
    }
    return report;
}

std::string serialize_gadget_map(const GadgetMap& map) {
    std::ostringstream out;
    for (int id = 0; id < map.gadget_size(); ++id) {
        const auto& rec = map.roles[id];
        out << id << ' ' << to_string(rec.role);
        if (rec.role == GadgetRole::V || rec.role == GadgetRole::W)
            out << ' ' << rec.owner;
        else if (rec.role == GadgetRole::X || rec.role == GadgetRole::Y)
            out << ' ' << rec.owner << ' ' << rec.index;
        out << '\n';
    }
    return out.str();
}

GadgetMap parse_gadget_map(const std::string& text, const Graph& source) {
    GadgetMap canonical = layout_map(source);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int expected_id = 0;
    while (std::getline(in, line)) {
        ++lineno;
        bool blank = true;
        for (char ch : line) {
            if (ch == '#') break;
            if (!isspace(static_cast<unsigned char>(ch))) {
                blank = false;
                break;
            }
        }
        if (blank) continue;

        std::istringstream fields(line);
        int id;
        std::string role;
        if (!(fields >> id >> role)) throw ParseError("expected '<id> <role> [...]'", lineno);
        if (id != expected_id)
            throw ParseError("gadget ids must be consecutive from 0; expected " +
                                 std::to_string(expected_id),
                             lineno);
        if (id >= canonical.gadget_size())
            throw ParseError("more entries than the gadget for this source graph has", lineno);
        const auto& rec = canonical.roles[id];
        if (role != to_string(rec.role))
            throw ParseError("role disagrees with the canonical layout (expected " +
                                 to_string(rec.role) + ")",
                             lineno);
        if (rec.role == GadgetRole::V || rec.role == GadgetRole::W) {
            int owner;
            if (!(fields >> owner)) throw ParseError("missing owner", lineno);
            if (owner != rec.owner) throw ParseError("owner disagrees with the canonical layout", lineno);
        } else if (rec.role == GadgetRole::X || rec.role == GadgetRole::Y) {
            int owner, index;
            if (!(fields >> owner >> index)) throw ParseError("missing owner or index", lineno);
            if (owner != rec.owner || index != rec.index)
                throw ParseError("owner/index disagree with the canonical layout", lineno);
        }
        std::string extra;
        if (fields >> extra) throw ParseError("trailing content", lineno);
        ++expected_id;
    }
    if (expected_id != canonical.gadget_size())
        throw ParseError("map file ended early: expected " +
                             std::to_string(canonical.gadget_size()) + " entries",
                         lineno == 0 ? 1 : lineno);
    return canonical;
}

}  // namespace dynamo
