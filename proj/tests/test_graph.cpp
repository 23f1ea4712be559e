#include <doctest.h>

#include "dynamo/graph.hpp"
#include "oracles.hpp"

using namespace dynamo;
using namespace testing_oracles;

TEST_CASE("parse_graph accepts the documented format") {
    const auto g = parse_graph("# triangle\np undirected 3 3\ne 0 1\ne 1 2\ne 0 2\n");
    CHECK(g.n == 3);
    CHECK_FALSE(g.directed);
    CHECK(g.edge_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(g.out_degree(v) == 2);
}

TEST_CASE("parse_graph keeps a single arc directed") {
    const auto g = parse_graph("p directed 2 1\ne 0 1\n");
    CHECK(g.directed);
    CHECK(g.in_degree(0) == 0);
    CHECK(g.in_degree(1) == 1);
    CHECK(validate(g).min_indegree == 0);
    CHECK(validate(g).isolated_vertices.empty());
}

TEST_CASE("parse_graph rejects malformed input with line numbers") {
    CHECK_THROWS_AS(parse_graph("p undirected 2 2\ne 0 1\ne 1 0\n"), ParseError);
    try {
        parse_graph("p undirected 2 2\ne 0 1\ne 1 0\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);  // the duplicate edge
    }
    CHECK_THROWS_AS(parse_graph("q undirected 2 1\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p undirected two 1\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p undirected 2 1\ne 0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p undirected 2 1\ne 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p undirected 2 2\ne 0 1\n"), ParseError);           // missing edge
    CHECK_THROWS_AS(parse_graph("p undirected 2 0\ne 0 1\n"), ParseError);           // extra edge
    CHECK_THROWS_AS(parse_graph("# nothing\n"), ParseError);                          // no header
    CHECK_THROWS_AS(parse_graph("p undirected 2 1\ne 0 1 junk\n"), ParseError);
}

TEST_CASE("serialize_graph emits lexicographic edges and round-trips") {
    const auto k3 = parse_graph("p undirected 3 3\ne 2 0\ne 1 0\ne 2 1\n");
    CHECK(graphs_equal(parse_graph(serialize_graph(k3)), k3));

    const auto cycle = make_graph(3, true, {{2, 0}, {0, 1}, {1, 2}});
    CHECK(serialize_graph(cycle) == "p directed 3 3\ne 0 1\ne 1 2\ne 2 0\n");

    const auto lonely = make_graph(1, false, {});
    CHECK(serialize_graph(lonely) == "p undirected 1 0\n");
}

TEST_CASE("vertex set files") {
    CHECK(parse_vertex_set("# seeds\n2\n0\n2\n", 5) == VertexSet{0, 2});
    CHECK(serialize_vertex_set({1, 3}) == "1\n3\n");
    CHECK_THROWS_AS(parse_vertex_set("7\n", 5), ParseError);
    CHECK_THROWS_AS(parse_vertex_set("zero\n", 5), ParseError);
}

TEST_CASE("generators produce the advertised shapes") {
    const auto k5 = generate({GraphFamily::Complete, 5}, 0);
    CHECK(k5.edge_count() == 10);
    for (int v = 0; v < 5; ++v) CHECK(k5.out_degree(v) == 4);

    GenSpec cycle_spec;
    cycle_spec.family = GraphFamily::Cycle;
    cycle_spec.n = 4;
    cycle_spec.directed = true;
    const auto c4 = generate(cycle_spec, 0);
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.in_degree(v) == 1);

    GenSpec torus_spec;
    torus_spec.family = GraphFamily::GridTorus;
    torus_spec.rows = 3;
    torus_spec.cols = 4;
    const auto torus = generate(torus_spec, 0);
    CHECK(torus.n == 12);
    for (int v = 0; v < torus.n; ++v) CHECK(torus.out_degree(v) == 4);
}

TEST_CASE("random generators are deterministic per seed") {
    GenSpec spec;
    spec.family = GraphFamily::RandomGnp;
    spec.n = 20;
    spec.p = 0.3;
    CHECK(graphs_equal(generate(spec, 7), generate(spec, 7)));
    CHECK_FALSE(graphs_equal(generate(spec, 7), generate(spec, 8)));

    spec.family = GraphFamily::RandomDigraph;
    spec.p = 0.05;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = generate(spec, seed);
        CHECK(validate(g).min_indegree >= 1);
    }
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(generate({GraphFamily::Cycle, 2}, 0), std::invalid_argument);
    GenSpec bad_p;
    bad_p.family = GraphFamily::RandomGnp;
    bad_p.n = 5;
    bad_p.p = 1.0;
    CHECK_THROWS_AS(generate(bad_p, 0), std::invalid_argument);
    GenSpec torus;
    torus.family = GraphFamily::GridTorus;
    torus.rows = 2;
    torus.cols = 5;
    CHECK_THROWS_AS(generate(torus, 0), std::invalid_argument);
}

TEST_CASE("validate reports connectivity and isolation") {
    const auto k3 = generate({GraphFamily::Complete, 3}, 0);
    const auto d = validate(k3);
    CHECK(d.is_simple);
    CHECK(d.min_indegree == 2);
    CHECK(d.is_connected);

    const auto split = make_graph(4, false, {{0, 1}, {2, 3}});
    CHECK_FALSE(validate(split).is_connected);

    const auto with_isolated = make_graph(3, false, {{0, 1}});
    CHECK(validate(with_isolated).isolated_vertices == VertexSet{2});
}

TEST_CASE("bfs_distances examples") {
    const auto path = make_graph(3, false, {{0, 1}, {1, 2}});
    CHECK(bfs_distances(path, 0) == std::vector<int>{0, 1, 2});

    const auto k4 = generate({GraphFamily::Complete, 4}, 0);
    CHECK(bfs_distances(k4, 2) == std::vector<int>{1, 1, 0, 1});

    const auto split = make_graph(4, false, {{0, 1}, {2, 3}});
    CHECK(bfs_distances(split, 0) == std::vector<int>{0, 1, kUnreachable, kUnreachable});
}

TEST_CASE("induced_components examples") {
    GenSpec c5;
    c5.family = GraphFamily::Cycle;
    c5.n = 5;
    const auto cycle = generate(c5, 0);
    const auto comps = induced_components(cycle, {0, 1, 3});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1});
    CHECK(comps[1] == VertexSet{3});

    VertexSet all{0, 1, 2, 3, 4};
    CHECK(induced_components(cycle, all).size() == 1);
    CHECK(induced_components(cycle, {}).empty());
}

TEST_CASE("round-trip and transpose coherence on random graphs") {
    TestRng rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + rng.below(199);
        const bool directed = trial % 2 == 0;
        const auto g = random_graph(n, 0.05 + 0.3 * rng.unit(), directed, rng);
        CHECK(graphs_equal(parse_graph(serialize_graph(g)), g));
        for (int u = 0; u < n; ++u)
            for (int v : g.out_adj[u])
                CHECK(std::binary_search(g.in_adj[v].begin(), g.in_adj[v].end(), u));
        for (int v = 0; v < n; ++v)
            for (int u : g.in_adj[v])
                CHECK(std::binary_search(g.out_adj[u].begin(), g.out_adj[u].end(), v));
    }
}

TEST_CASE("induced_components partition their subset and are connected") {
    TestRng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + rng.below(60);
        const auto g = random_graph(n, 0.08, false, rng);
        const auto subset = random_subset(n, rng);
        const auto comps = induced_components(g, subset);

        VertexSet covered;
        for (const auto& comp : comps) covered = set_union(covered, comp);
        CHECK(covered == subset);

        std::size_t total = 0;
        for (const auto& comp : comps) total += comp.size();
        CHECK(total == subset.size());

        for (const auto& comp : comps) {
            // Internally connected: BFS inside the component reaches all of it.
            const auto sub = induced_subgraph(g, comp);
            if (sub.n == 0) continue;
            const auto dist = bfs_distances(sub, 0);
            for (int v = 0; v < sub.n; ++v) CHECK(dist[v] != kUnreachable);
        }
    }
}

TEST_CASE("bfs agrees with Floyd-Warshall on random graphs") {
    TestRng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + rng.below(29);
        const auto g = random_graph(n, 0.15, trial % 2 == 0, rng);
        const auto all_pairs = floyd_warshall(g);
        for (int src = 0; src < n; ++src) {
            const auto dist = bfs_distances(g, src);
            for (int v = 0; v < n; ++v) {
                if (dist[v] == kUnreachable)
                    CHECK(all_pairs[src][v] >= kFarAway);
                else
                    CHECK(dist[v] == all_pairs[src][v]);
            }
        }
    }
}
