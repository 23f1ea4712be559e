#include "dynamo/graph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_set>

namespace dynamo {

int Graph::edge_count() const {
    std::size_t arcs = 0;
    for (const auto& row : out_adj) arcs += row.size();
    return static_cast<int>(directed ? arcs : arcs / 2);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& row = out_adj[u];
    return std::binary_search(row.begin(), row.end(), v);
}

Graph make_graph(int n, bool directed, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n = n;
    g.directed = directed;
    g.out_adj.assign(n, {});
    g.in_adj.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.out_adj[u].push_back(v);
        g.in_adj[v].push_back(u);
        if (!directed) {
            g.out_adj[v].push_back(u);
            g.in_adj[u].push_back(v);
        }
    }
    for (int v = 0; v < n; ++v) {
        std::sort(g.out_adj[v].begin(), g.out_adj[v].end());
        std::sort(g.in_adj[v].begin(), g.in_adj[v].end());
        if (std::adjacent_find(g.out_adj[v].begin(), g.out_adj[v].end()) != g.out_adj[v].end())
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
    return g;
}

Diagnostics validate(const Graph& g) {
    Diagnostics d;
    d.is_simple = true;
    for (int v = 0; v < g.n; ++v) {
        const auto& row = g.out_adj[v];
        if (!std::is_sorted(row.begin(), row.end()) ||
            std::adjacent_find(row.begin(), row.end()) != row.end() ||
            std::binary_search(row.begin(), row.end(), v)) {
            d.is_simple = false;
        }
    }
    d.min_indegree = g.n == 0 ? 0 : g.in_degree(0);
    for (int v = 0; v < g.n; ++v) {
        d.min_indegree = std::min(d.min_indegree, g.in_degree(v));
        if (g.in_degree(v) == 0 && g.out_degree(v) == 0) d.isolated_vertices.push_back(v);
    }
    // Connectivity of the underlying undirected graph.
    d.is_connected = true;
    if (g.n > 1) {
        std::vector<char> seen(g.n, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            auto visit = [&](int w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    q.push(w);
                }
            };
            for (int w : g.out_adj[u]) visit(w);
            for (int w : g.in_adj[u]) visit(w);
        }
        d.is_connected = reached == g.n;
    }
    return d;
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;  // blank
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    bool directed = false;
    int n = 0, m = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::unordered_set<std::uint64_t> seen_edges;
    int header_line = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (!have_header) {
            if (tag != "p") throw ParseError("expected 'p <directed|undirected> <n> <m>' header", lineno);
            std::string mode;
            if (!(fields >> mode >> n >> m)) throw ParseError("malformed header", lineno);
            std::string extra;
            if (fields >> extra) throw ParseError("trailing content after header", lineno);
            if (mode == "directed")
                directed = true;
            else if (mode == "undirected")
                directed = false;
            else
                throw ParseError("graph mode must be 'directed' or 'undirected'", lineno);
            if (n < 0 || m < 0) throw ParseError("negative vertex or edge count", lineno);
            have_header = true;
            header_line = lineno;
            continue;
        }
        if (tag != "e") throw ParseError("expected edge line 'e <u> <v>'", lineno);
        if (static_cast<int>(edges.size()) == m) throw ParseError("more edges than declared in header", lineno);
        int u, v;
        if (!(fields >> u >> v)) throw ParseError("malformed edge line", lineno);
        std::string extra;
        if (fields >> extra) throw ParseError("trailing content after edge", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex id out of range", lineno);
        if (u == v) throw ParseError("self-loop", lineno);
        int a = u, b = v;
        if (!directed && a > b) std::swap(a, b);
        auto key = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) + b;
        if (!seen_edges.insert(key).second) throw ParseError("duplicate edge", lineno);
        edges.emplace_back(u, v);
    }
    if (!have_header) throw ParseError("missing header", lineno == 0 ? 1 : lineno);
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("declared " + std::to_string(m) + " edges but found " +
                             std::to_string(edges.size()),
                         header_line);
    return make_graph(n, directed, edges);
}

std::string serialize_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.out_adj[u])
            if (g.directed || u < v) edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end());
    std::ostringstream out;
    out << "p " << (g.directed ? "directed" : "undirected") << ' ' << g.n << ' ' << edges.size()
        << '\n';
    for (const auto& [u, v] : edges) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

VertexSet parse_vertex_set(const std::string& text, int n) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    VertexSet out;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream fields(line);
        int v;
        if (!(fields >> v)) throw ParseError("expected a vertex id", lineno);
        std::string extra;
        if (fields >> extra) throw ParseError("trailing content after vertex id", lineno);
        if (v < 0 || v >= n) throw ParseError("vertex id out of range", lineno);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string serialize_vertex_set(const VertexSet& s) {
    std::ostringstream out;
    for (int v : s) out << v << '\n';
    return out.str();
}

GraphFamily graph_family_from_string(const std::string& name) {
    if (name == "complete") return GraphFamily::Complete;
    if (name == "cycle") return GraphFamily::Cycle;
    if (name == "path") return GraphFamily::Path;
    if (name == "grid-torus") return GraphFamily::GridTorus;
    if (name == "random-gnp") return GraphFamily::RandomGnp;
    if (name == "random-digraph") return GraphFamily::RandomDigraph;
    throw std::invalid_argument("unknown graph family: " + name);
}

std::string to_string(GraphFamily family) {
    switch (family) {
        case GraphFamily::Complete: return "complete";
        case GraphFamily::Cycle: return "cycle";
        case GraphFamily::Path: return "path";
        case GraphFamily::GridTorus: return "grid-torus";
        case GraphFamily::RandomGnp: return "random-gnp";
        case GraphFamily::RandomDigraph: return "random-digraph";
    }
    return "?";
}

namespace {

// Explicit draws on top of mt19937_64 keep generated graphs identical across
// standard libraries (the std distributions are not pinned down).
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

std::uint64_t next_index(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

}  // namespace

Graph generate(const GenSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    switch (spec.family) {
        case GraphFamily::Complete: {
            if (spec.n < 1) throw std::invalid_argument("complete graph needs n >= 1");
            for (int u = 0; u < spec.n; ++u)
                for (int v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
            return make_graph(spec.n, false, edges);
        }
        case GraphFamily::Cycle: {
            if (spec.n < 3) throw std::invalid_argument("cycle needs n >= 3");
            for (int v = 0; v < spec.n; ++v) edges.emplace_back(v, (v + 1) % spec.n);
            return make_graph(spec.n, spec.directed, edges);
        }
        case GraphFamily::Path: {
            if (spec.n < 1) throw std::invalid_argument("path needs n >= 1");
            for (int v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
            return make_graph(spec.n, spec.directed, edges);
        }
        case GraphFamily::GridTorus: {
            if (spec.rows < 3 || spec.cols < 3)
                throw std::invalid_argument("grid torus needs rows >= 3 and cols >= 3");
            auto id = [&](int r, int c) { return r * spec.cols + c; };
            for (int r = 0; r < spec.rows; ++r)
                for (int c = 0; c < spec.cols; ++c) {
                    edges.emplace_back(id(r, c), id((r + 1) % spec.rows, c));
                    edges.emplace_back(id(r, c), id(r, (c + 1) % spec.cols));
                }
            return make_graph(spec.rows * spec.cols, false, edges);
        }
        case GraphFamily::RandomGnp: {
            if (spec.n < 1) throw std::invalid_argument("random-gnp needs n >= 1");
            if (!(spec.p > 0.0 && spec.p < 1.0))
                throw std::invalid_argument("random-gnp needs 0 < p < 1");
            for (int u = 0; u < spec.n; ++u)
                for (int v = u + 1; v < spec.n; ++v)
                    if (next_unit(rng) < spec.p) edges.emplace_back(u, v);
            return make_graph(spec.n, false, edges);
        }
        case GraphFamily::RandomDigraph: {
            if (spec.n < 2) throw std::invalid_argument("random-digraph needs n >= 2");
            if (!(spec.p > 0.0 && spec.p < 1.0))
                throw std::invalid_argument("random-digraph needs 0 < p < 1");
            std::vector<int> indegree(spec.n, 0);
            for (int u = 0; u < spec.n; ++u)
                for (int v = 0; v < spec.n; ++v)
                    if (u != v && next_unit(rng) < spec.p) {
                        edges.emplace_back(u, v);
                        ++indegree[v];
                    }
            // Repair: the coloring process assumes positive indegrees.
            for (int v = 0; v < spec.n; ++v) {
                if (indegree[v] > 0) continue;
                auto u = static_cast<VertexId>(next_index(rng, spec.n - 1));
                if (u >= v) ++u;
                edges.emplace_back(u, v);
            }
            return make_graph(spec.n, true, edges);
        }
    }
    throw std::invalid_argument("unknown graph family");
}

std::vector<int> bfs_distances(const Graph& g, VertexId source) {
    if (source < 0 || source >= g.n) throw std::invalid_argument("bfs source out of range");
    std::vector<int> dist(g.n, kUnreachable);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.out_adj[u])
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& subset) {
    if (g.directed) throw std::invalid_argument("induced_components expects an undirected graph");
    std::vector<char> in_subset(g.n, 0);
    for (int v : subset) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("subset vertex out of range");
        in_subset[v] = 1;
    }
    std::vector<char> seen(g.n, 0);
    std::vector<VertexSet> components;
    for (int start : subset) {
        if (seen[start]) continue;
        VertexSet comp;
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : g.out_adj[u])
                if (in_subset[v] && !seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

Graph induced_subgraph(const Graph& g, const VertexSet& subset) {
    std::vector<int> new_id(g.n, -1);
    for (std::size_t i = 0; i < subset.size(); ++i) new_id[subset[i]] = static_cast<int>(i);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u : subset)
        for (int v : g.out_adj[u]) {
            if (new_id[v] == -1) continue;
            if (g.directed || u < v) edges.emplace_back(new_id[u], new_id[v]);
        }
    return make_graph(static_cast<int>(subset.size()), g.directed, edges);
}

}  // namespace dynamo
