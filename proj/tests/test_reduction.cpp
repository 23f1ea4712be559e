#include <doctest.h>

#include "dynamo/oracle.hpp"
#include "dynamo/reduction.hpp"
#include "oracles.hpp"

using namespace dynamo;
using namespace testing_oracles;

namespace {

Graph single_edge() { return make_graph(2, false, {{0, 1}}); }

// Edge count re-derived from the seven families: v-X, w-N*, w-Y, Y-z1, Y-z2
// and the two pendant edges.
int expected_gadget_edges(const Graph& source) {
    const int n = source.n;
    const int m = source.edge_count();
    return 2 * m + (2 * m + n) + 2 * m + 2 * m + 2 * m + 2;
}

}  // namespace

TEST_CASE("build_gadget sizes and degrees for a single edge") {
    const auto [gadget, map] = build_gadget(single_edge());
    CHECK(gadget.n == 12);  // 2*2 + 4*1 + 4
    CHECK(gadget.edge_count() == 14);
    CHECK(gadget.edge_count() == expected_gadget_edges(map.source));
    for (int v = 0; v < gadget.n; ++v) CHECK(gadget.out_degree(v) % 2 == 1);

    // Degree facts: source and hub vertices have 2*deg+1, collectors 2m+1.
    CHECK(gadget.out_degree(0) == 3);
    CHECK(gadget.out_degree(map.w_id(0)) == 3);
    CHECK(gadget.out_degree(map.z1) == 3);
    CHECK(gadget.out_degree(map.x_id(0, 1)) == 1);
    CHECK(gadget.out_degree(map.y_id(0, 1)) == 3);
    CHECK(gadget.out_degree(map.g1) == 1);

    // Exact wiring of the seven edge families, spelled out for this instance.
    CHECK(gadget.neighbors(0) == VertexSet{map.w_id(0), map.w_id(1), map.x_id(0, 1)});
    CHECK(gadget.neighbors(map.w_id(0)) == VertexSet{0, 1, map.y_id(0, 1)});
    CHECK(gadget.neighbors(map.x_id(0, 1)) == VertexSet{0});
    CHECK(gadget.neighbors(map.y_id(0, 1)) == VertexSet{map.w_id(0), map.z1, map.z2});
    CHECK(gadget.neighbors(map.z1) == VertexSet{map.y_id(0, 1), map.y_id(1, 1), map.g1});
    CHECK(gadget.neighbors(map.g1) == VertexSet{map.z1});
    CHECK(gadget.neighbors(map.g2) == VertexSet{map.z2});
}

TEST_CASE("build_gadget on the triangle") {
    const auto k3 = generate({GraphFamily::Complete, 3}, 0);
    const auto [gadget, map] = build_gadget(k3);
    CHECK(gadget.n == 22);  // 2*3 + 4*3 + 4
    CHECK(gadget.edge_count() == expected_gadget_edges(k3));
    for (int v = 0; v < k3.n; ++v) {
        CHECK(gadget.out_degree(v) == 2 * k3.out_degree(v) + 1);
        CHECK(gadget.out_degree(map.w_id(v)) == 2 * k3.out_degree(v) + 1);
    }
    CHECK(gadget.out_degree(map.z1) == 2 * k3.edge_count() + 1);
    CHECK(gadget.out_degree(map.z2) == 2 * k3.edge_count() + 1);
}

TEST_CASE("build_gadget rejects bad sources") {
    CHECK_THROWS_AS(build_gadget(make_graph(3, false, {{0, 1}})), PreconditionError);
    CHECK_THROWS_AS(build_gadget(make_graph(2, true, {{0, 1}, {1, 0}})), std::invalid_argument);
}

TEST_CASE("gadget structure: bipartite by roles and low diameter") {
    TestRng rng(51);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + rng.below(11);
        const auto source = random_connected(n, 0.25, rng);
        const auto [gadget, map] = build_gadget(source);
        const auto report = check_gadget_invariants(gadget, map, 10, trial);
        CHECK(report.bipartite_by_roles);
        CHECK(report.z1_eccentricity_ok);
        CHECK(report.degrees_all_odd);
        CHECK(report.vertex_formula_ok);
        CHECK(report.edge_formula_ok);
        CHECK(report.closures_coincide);
        CHECK(report.all_ok());

        // Diameter at most 8, straight from all-pairs distances.
        const auto dist = floyd_warshall(gadget);
        for (int u = 0; u < gadget.n; ++u)
            for (int v = 0; v < gadget.n; ++v) CHECK(dist[u][v] <= 8);
    }
}

TEST_CASE("blocking_set of the single edge") {
    const auto [gadget, map] = build_gadget(single_edge());
    // B_0 = {w_0, 0, 1, x_{0,1}, x_{1,1}}.
    const VertexSet expected{0, 1, map.w_id(0), map.x_id(0, 1), map.x_id(1, 1)};
    auto sorted = expected;
    std::sort(sorted.begin(), sorted.end());
    CHECK(blocking_set(map, 0) == sorted);
    CHECK(blocking_set(map, 0).size() == 5);
}

TEST_CASE("blocking sets are internally majority-closed") {
    TestRng rng(52);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 2 + rng.below(14);
        const auto source = random_connected(n, 0.2, rng);
        const auto [gadget, map] = build_gadget(source);
        for (int v = 0; v < n; ++v) {
            const auto bv = blocking_set(map, v);
            for (int alpha : bv) {
                int inside = 0;
                for (int u : gadget.neighbors(alpha))
                    if (std::binary_search(bv.begin(), bv.end(), u)) ++inside;
                CHECK(2 * inside > gadget.out_degree(alpha));
            }
        }
    }
}

TEST_CASE("complements of blocking sets are closed under strict coloring") {
    TestRng rng(53);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 2 + rng.below(14);
        const auto source = random_connected(n, 0.2, rng);
        const auto [gadget, map] = build_gadget(source);
        for (int v = 0; v < n; ++v) {
            const auto bv = blocking_set(map, v);
            VertexSet rest;
            for (int u = 0; u < gadget.n; ++u)
                if (!std::binary_search(bv.begin(), bv.end(), u)) rest.push_back(u);
            const auto result = closure(gadget, rest, ThresholdScenario::strict_majority());
            CHECK(result.white == rest);
        }
    }
}

TEST_CASE("domset_to_dynamo on the documented instances") {
    const auto [gadget, map] = build_gadget(single_edge());
    const auto seeds = domset_to_dynamo(map, {0});
    CHECK(seeds.size() == 3);
    CHECK(closure(gadget, seeds, ThresholdScenario::strict_majority()).white.size() == 12);

    const auto k3 = generate({GraphFamily::Complete, 3}, 0);
    const auto [gadget3, map3] = build_gadget(k3);
    const auto seeds3 = domset_to_dynamo(map3, {0});
    CHECK(seeds3.size() == 3);
    CHECK(is_dynamo(gadget3, seeds3, ThresholdScenario::strict_majority()));

    const auto everything = domset_to_dynamo(map3, {0, 1, 2});
    CHECK(everything.size() == 5);
    CHECK(is_dynamo(gadget3, everything, ThresholdScenario::strict_majority()));
}

TEST_CASE("domset_to_dynamo rejects non-dominating input") {
    const auto star = make_graph(4, false, {{0, 1}, {0, 2}, {0, 3}});
    const auto map = build_gadget(star).second;
    CHECK_THROWS_AS(domset_to_dynamo(map, {1}), CertificateError);
    CHECK_THROWS_WITH_AS(domset_to_dynamo(map, {1}),
                         doctest::Contains("vertex 2"), CertificateError);
}

TEST_CASE("dynamo_to_domset on the documented instances") {
    const auto map = build_gadget(single_edge()).second;
    const auto seeds = domset_to_dynamo(map, {0});
    CHECK(dynamo_to_domset(map, seeds) == VertexSet{0});

    const auto gadget = build_gadget(single_edge()).first;
    VertexSet all(gadget.n);
    for (int v = 0; v < gadget.n; ++v) all[v] = v;
    CHECK(dynamo_to_domset(map, all) == VertexSet{0, 1});

    const auto k3 = generate({GraphFamily::Complete, 3}, 0);
    const auto map3 = build_gadget(k3).second;
    const auto seeds3 = domset_to_dynamo(map3, {1});
    CHECK(dynamo_to_domset(map3, seeds3) == VertexSet{1});
}

TEST_CASE("dynamo_to_domset rejects non-dynamos and names a blocking set") {
    const auto map = build_gadget(single_edge()).second;
    const VertexSet just_collectors{map.z1, map.z2};
    CHECK_THROWS_WITH_AS(dynamo_to_domset(map, just_collectors),
                         doctest::Contains("blocking set"), CertificateError);
}

TEST_CASE("round-trip degradation stays within two extra seeds") {
    TestRng rng(54);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + rng.below(12);
        const auto source = random_connected(n, 0.25, rng);
        const auto map = build_gadget(source).second;
        const auto domset = greedy_domset(source);
        const auto back = dynamo_to_domset(map, domset_to_dynamo(map, domset));
        CHECK(back.size() <= domset.size() + 2);
        CHECK(is_dominating(source, back));
    }
}

TEST_CASE("greedy_domset on the documented instances") {
    for (int n : {3, 5, 8}) CHECK(greedy_domset(generate({GraphFamily::Complete, n}, 0)).size() == 1);

    GenSpec c6;
    c6.family = GraphFamily::Cycle;
    c6.n = 6;
    CHECK(greedy_domset(generate(c6, 0)) == VertexSet{0, 3});

    const auto star = make_graph(5, false, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(greedy_domset(star) == VertexSet{0});

    CHECK_THROWS_AS(greedy_domset(make_graph(2, false, {})), PreconditionError);
}

TEST_CASE("greedy dominating sets dominate and the oracle is no larger") {
    TestRng rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + rng.below(14);
        const auto g = random_connected(n, 0.2, rng);
        const auto greedy = greedy_domset(g);
        CHECK(is_dominating(g, greedy));
        const auto oracle = min_domset_bruteforce(g);
        CHECK(oracle.optimum_size <= static_cast<int>(greedy.size()));
    }
}

TEST_CASE("sandwich: domination number vs gadget min-seed on tiny sources") {
    TestRng rng(56);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 2 + rng.below(3);
        Graph source = random_connected(n, 0.3, rng);
        if (source.edge_count() > 4) continue;
        const auto [gadget, map] = build_gadget(source);
        const int gamma = min_domset_bruteforce(source).optimum_size;
        const auto min_seed =
            min_dynamo_bruteforce(gadget, ThresholdScenario::strict_majority(), gamma + 2);
        REQUIRE(min_seed.found());
        CHECK(min_seed.optimum_size >= gamma);
        CHECK(min_seed.optimum_size <= gamma + 2);
    }
}

TEST_CASE("gadget map files round-trip and reject tampering") {
    const auto k3 = generate({GraphFamily::Complete, 3}, 0);
    const auto map = build_gadget(k3).second;
    const auto text = serialize_gadget_map(map);
    const auto parsed = parse_gadget_map(text, k3);
    CHECK(parsed.gadget_size() == map.gadget_size());
    CHECK(serialize_gadget_map(parsed) == text);

    auto tampered = text;
    tampered.replace(tampered.find(" V "), 3, " W ");
    CHECK_THROWS_AS(parse_gadget_map(tampered, k3), ParseError);
    CHECK_THROWS_AS(parse_gadget_map(text.substr(0, text.size() / 2), k3), ParseError);
}
