#include "dynamo/undirected_dynamo.hpp"

#include <algorithm>

namespace dynamo {

namespace {

void require_undirected(const Graph& g) {
    if (g.directed) throw std::invalid_argument("cut operations expect an undirected graph");
}

// Neighbors of v on v's own side.
int same_side_degree(const Graph& g, const Cut& c, VertexId v) {
    int same = 0;
    for (int u : g.neighbors(v))
        if (c.in_s[u] == c.in_s[v]) ++same;
    return same;
}

}  // namespace

Cut cut_from_set(const Graph& g, const VertexSet& s) {
    require_undirected(g);
    Cut c;
    c.in_s.assign(g.n, 0);
    for (int v : s) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("cut vertex out of range");
        c.in_s[v] = 1;
    }
    return c;
}

VertexSet cut_side(const Cut& c, bool s_side) {
    VertexSet side;
    for (int v = 0; v < c.size(); ++v)
        if (static_cast<bool>(c.in_s[v]) == s_side) side.push_back(v);
    return side;
}

std::int64_t cut_edge_count(const Graph& g, const Cut& c) {
    std::int64_t crossing = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.neighbors(u))
            if (u < v && c.in_s[u] != c.in_s[v]) ++crossing;
    return crossing;
}

ProperReport is_proper(const Graph& g, const Cut& c) {
    require_undirected(g);
    ProperReport report;
    for (int v = 0; v < g.n; ++v) {
        int same = same_side_degree(g, c, v);
        int opposite = g.out_degree(v) - same;
        if (same > opposite) report.violators.push_back(v);
    }
    report.proper = report.violators.empty();
    return report;
}

Cut make_proper(const Graph& g, Cut c) {
    require_undirected(g);
    for (int v = 0; v < g.n; ++v)
        if (g.out_degree(v) == 0)
            throw PreconditionError("vertex " + std::to_string(v) +
                                    " is isolated; properness is degenerate");

    std::vector<int> same(g.n);
    for (int v = 0; v < g.n; ++v) same[v] = same_side_degree(g, c, v);

    // Flip the smallest violating id, restart the scan. Each flip raises the
    // cut size by same - opposite >= 1, so at most |E| flips happen.
    const std::int64_t flip_guard = static_cast<std::int64_t>(g.edge_count()) + 1;
    std::int64_t flips = 0;
    for (;;) {
        int violator = -1;
        for (int v = 0; v < g.n; ++v)
            if (2 * same[v] > g.out_degree(v)) {
                violator = v;
                break;
            }
        if (violator == -1) break;
        if (++flips > flip_guard) throw std::logic_error("make_proper failed to terminate");
        c.in_s[violator] ^= 1;
        same[violator] = g.out_degree(violator) - same[violator];
        for (int u : g.neighbors(violator))
            same[u] += (c.in_s[u] == c.in_s[violator]) ? 1 : -1;
    }
    return c;
}

BadComponentReport bad_components(const Graph& g, const Cut& c) {
    require_undirected(g);
    BadComponentReport report;
    report.bad_vertex.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        int same = same_side_degree(g, c, v);
        report.bad_vertex[v] = (2 * same == g.out_degree(v)) ? 1 : 0;
    }
    for (bool s_side : {true, false}) {
        auto& bucket = s_side ? report.bad_in_s : report.bad_in_co_s;
        for (const auto& comp : induced_components(g, cut_side(c, s_side))) {
            bool all_bad = true;
            for (int v : comp)
                if (!report.bad_vertex[v]) {
                    all_bad = false;
                    break;
                }
            if (all_bad) bucket.push_back(comp);
        }
    }
    return report;
}

std::int64_t psi(const Graph& g, const Cut& c, VertexId v_star) {
    require_undirected(g);
    if (v_star < 0 || v_star >= g.n) throw std::invalid_argument("v_star out of range");
    const auto dist = bfs_distances(g, v_star);
    for (int v = 0; v < g.n; ++v)
        if (dist[v] == kUnreachable)
            throw PreconditionError("psi needs a connected graph; vertex " + std::to_string(v) +
                                    " is unreachable");
    const auto report = bad_components(g, c);
    std::int64_t distance_sum = 0;
    auto add_component = [&](const VertexSet& comp) {
        int best = dist[comp.front()];
        for (int v : comp) best = std::min(best, dist[v]);
        distance_sum += best;
    };
    for (const auto& comp : report.bad_in_s) add_component(comp);
    for (const auto& comp : report.bad_in_co_s) add_component(comp);
    const std::int64_t n2 = static_cast<std::int64_t>(g.n) * g.n;
    return cut_edge_count(g, c) * n2 - distance_sum;
}

namespace {

bool contains_set(const std::vector<VertexSet>& family, const VertexSet& comp) {
    return std::find(family.begin(), family.end(), comp) != family.end();
}

bool contains_vertex(const VertexSet& comp, VertexId v) {
    return std::binary_search(comp.begin(), comp.end(), v);
}

// Containment facts for a raw bad-vertex move: the mover's old component
// disappears from the S side and no new bad component may appear on the
// other side except the one absorbing the mover.
void check_move_lemmas(const Graph& g, const BadComponentReport& before,
                       const VertexSet& moved_component, VertexId v, const Cut& after_cut) {
    const auto after = bad_components(g, after_cut);
    for (const auto& comp : after.bad_in_s) {
        if (comp == moved_component || !contains_set(before.bad_in_s, comp))
            throw std::logic_error("bad components on the vacated side failed containment");
    }
    for (const auto& comp : after.bad_in_co_s) {
        if (contains_vertex(comp, v)) continue;  // the component that absorbed v
        if (!contains_set(before.bad_in_co_s, comp))
            throw std::logic_error("bad components on the receiving side failed containment");
    }
}

struct ComponentChoice {
    VertexSet component;
    bool on_s_side;
};

// Bad component avoiding v_star with the smallest minimum id.
ComponentChoice choose_bad_component(const BadComponentReport& report, VertexId v_star) {
    ComponentChoice choice;
    bool found = false;
    auto consider = [&](const std::vector<VertexSet>& family, bool s_side) {
        for (const auto& comp : family) {
            if (contains_vertex(comp, v_star)) continue;
            if (!found || comp.front() < choice.component.front()) {
                choice = {comp, s_side};
                found = true;
            }
        }
    };
    consider(report.bad_in_s, true);
    consider(report.bad_in_co_s, false);
    if (!found) throw std::logic_error("no bad component avoids v_star");
    return choice;
}

}  // namespace

RefinedCut refine_cut(const Graph& g) {
    require_undirected(g);
    if (g.n < 2) throw PreconditionError("refine_cut needs at least two vertices");
    if (!validate(g).is_connected) throw PreconditionError("refine_cut needs a connected graph");

    const VertexId v_star = 0;
    const auto dist = bfs_distances(g, v_star);

    RefinedCut rc;
    rc.cut = make_proper(g, cut_from_set(g, {}));
    std::int64_t current_psi = psi(g, rc.cut, v_star);
    rc.psi_trace.push_back(current_psi);

    for (;;) {
        auto report = bad_components(g, rc.cut);
        if (report.total() <= 1) break;

        auto choice = choose_bad_component(report, v_star);
        if (!choice.on_s_side) {
            // Work with the component's side named S.
            for (auto& flag : rc.cut.in_s) flag ^= 1;
            report = bad_components(g, rc.cut);
        }

        // Closest-to-v_star vertex of the component, smallest id among ties.
        VertexId v = choice.component.front();
        for (int u : choice.component)
            if (dist[u] < dist[v]) v = u;

        const std::int64_t edges_before = cut_edge_count(g, rc.cut);
        Cut moved = rc.cut;
        moved.in_s[v] = 0;

        // Moving a bad vertex never changes the cut size.
        if (cut_edge_count(g, moved) != edges_before)
            throw std::logic_error("bad-vertex move changed the cut size");
        check_move_lemmas(g, report, choice.component, v, moved);
        if (psi(g, moved, v_star) <= current_psi)
            throw std::logic_error("bad-vertex move failed to raise psi");

        Cut next = std::move(moved);
        if (!is_proper(g, next).proper) {
            next = make_proper(g, next);
            if (cut_edge_count(g, next) <= edges_before)
                throw std::logic_error("properness repair failed to grow the cut");
        }
        const std::int64_t next_psi = psi(g, next, v_star);
        if (next_psi <= current_psi) throw std::logic_error("refinement round failed to raise psi");

        rc.cut = std::move(next);
        current_psi = next_psi;
        rc.psi_trace.push_back(current_psi);
        ++rc.iterations;
    }
    return rc;
}

namespace {

struct ComponentDynamo {
    VertexSet seeds;  // ids of the component's induced subgraph
    RefinedCut refined;
};

ComponentDynamo component_dynamo(const Graph& g) {
    ComponentDynamo out;
    out.refined = refine_cut(g);
    const auto report = bad_components(g, out.refined.cut);

    // One vertex of the unique bad component when there is one; otherwise
    // any vertex works and vertex 0 keeps the choice deterministic.
    VertexId x = 0;
    if (report.total() == 1) {
        const auto& unique_comp =
            report.bad_in_s.empty() ? report.bad_in_co_s.front() : report.bad_in_s.front();
        x = unique_comp.front();
    }

    auto with_x = [&](bool s_side) {
        VertexSet side = cut_side(out.refined.cut, s_side);
        if (!contains_vertex(side, x)) side.insert(std::lower_bound(side.begin(), side.end(), x), x);
        return side;
    };
    const VertexSet candidate_s = with_x(true);
    const VertexSet candidate_co = with_x(false);

    const auto strict = ThresholdScenario::strict_majority();
    if (!is_dynamo(g, candidate_s, strict) || !is_dynamo(g, candidate_co, strict))
        throw std::logic_error("refined cut side failed dynamo verification");

    if (candidate_s.size() != candidate_co.size()) {
        out.seeds = candidate_s.size() < candidate_co.size() ? candidate_s : candidate_co;
    } else {
        out.seeds = contains_vertex(candidate_s, 0) ? candidate_s : candidate_co;
    }
    if (2 * static_cast<int>(out.seeds.size()) > g.n + 1)
        throw std::logic_error("seed set exceeds the ceil(n/2) bound");
    return out;
}

}  // namespace

UndirectedDynamoResult find_dynamo_undirected(const Graph& g) {
    require_undirected(g);
    if (g.n < 1) throw std::invalid_argument("empty graph");

    VertexSet all(g.n);
    for (int v = 0; v < g.n; ++v) all[v] = v;
    const auto components = induced_components(g, all);

    UndirectedDynamoResult result;
    for (const auto& comp : components) {
        if (comp.size() == 1)
            throw PreconditionError("vertex " + std::to_string(comp.front()) +
                                    " is isolated; the coloring process needs positive indegrees");
        const Graph sub = induced_subgraph(g, comp);
        auto part = component_dynamo(sub);
        for (int local : part.seeds) result.seeds.push_back(comp[local]);
        result.iterations += part.refined.iterations;
        result.psi_traces.push_back(std::move(part.refined.psi_trace));
    }
    std::sort(result.seeds.begin(), result.seeds.end());

    if (!is_dynamo(g, result.seeds, ThresholdScenario::strict_majority()))
        throw std::logic_error("combined seed set failed dynamo verification");
    return result;
}

}  // namespace dynamo
