#include <doctest.h>

#include "dynamo/digraph_dynamo.hpp"
#include "dynamo/oracle.hpp"
#include "oracles.hpp"

using namespace dynamo;
using namespace testing_oracles;

namespace {

Graph directed_cycle(int n) {
    GenSpec spec;
    spec.family = GraphFamily::Cycle;
    spec.n = n;
    spec.directed = true;
    return generate(spec, 0);
}

Partition partition_of(const Graph& g, int k, std::vector<VertexSet> blocks) {
    Partition p;
    p.k = k;
    p.blocks = std::move(blocks);
    check_partition(g, p);
    return p;
}

// Independent eta: closure sizes computed by the rescan oracle.
std::int64_t eta_by_rescan(const Graph& g, const Partition& p) {
    const auto s = ThresholdScenario::fraction(p.k);
    std::vector<char> in_block(g.n);
    std::int64_t total = 0;
    for (const auto& block : p.blocks) {
        std::fill(in_block.begin(), in_block.end(), 0);
        for (int v : block) in_block[v] = 1;
        VertexSet seeds;
        for (int v = 0; v < g.n; ++v)
            if (!in_block[v]) seeds.push_back(v);
        total += static_cast<std::int64_t>(closure_rescan(g, seeds, s).size());
    }
    return total;
}

Partition random_partition(const Graph& g, int k, TestRng& rng) {
    Partition p;
    p.k = k;
    p.blocks.assign(k + 1, {});
    for (int v = 0; v < g.n; ++v) p.blocks[rng.below(k + 1)].push_back(v);
    return p;
}

}  // namespace

TEST_CASE("eta on the directed triangle") {
    const auto g = directed_cycle(3);
    CHECK(eta(g, partition_of(g, 1, {{0, 1, 2}, {}})) == 3);
    CHECK(eta(g, partition_of(g, 1, {{0}, {1, 2}})) == 6);
}

TEST_CASE("eta rejects invalid partitions") {
    const auto g = directed_cycle(3);
    Partition missing;
    missing.k = 1;
    missing.blocks = {{0}, {1}};
    CHECK_THROWS_AS(eta(g, missing), std::invalid_argument);
    Partition doubled;
    doubled.k = 1;
    doubled.blocks = {{0, 1, 2}, {2}};
    CHECK_THROWS_AS(eta(g, doubled), std::invalid_argument);
}

TEST_CASE("eta stays within [k*n, (k+1)*n] and matches the rescan oracle") {
    TestRng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + rng.below(30);
        const int k = 1 + rng.below(3);
        const auto g = random_network(n, 0.15, rng);
        const auto p = random_partition(g, k, rng);
        const auto value = eta(g, p);
        CHECK(value == eta_by_rescan(g, p));
        CHECK(value >= static_cast<std::int64_t>(k) * n);
        CHECK(value <= static_cast<std::int64_t>(k + 1) * n);
    }
}

TEST_CASE("eta is maximal exactly when every complement is a dynamo") {
    TestRng rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + rng.below(48);
        const int k = 1 + rng.below(2);
        const auto g = random_network(n, 0.2, rng);
        const auto p = random_partition(g, k, rng);
        const auto scenario = ThresholdScenario::fraction(k);

        bool all_dynamo = true;
        bool all_contained = true;
        std::vector<char> in_block(g.n);
        for (const auto& block : p.blocks) {
            std::fill(in_block.begin(), in_block.end(), 0);
            for (int v : block) in_block[v] = 1;
            VertexSet seeds;
            for (int v = 0; v < g.n; ++v)
                if (!in_block[v]) seeds.push_back(v);
            const auto white = closure(g, seeds, scenario).white;
            if (static_cast<int>(white.size()) != g.n) all_dynamo = false;
            if (!is_subset(block, white)) all_contained = false;
        }
        const bool maximal = eta(g, p) == static_cast<std::int64_t>(k + 1) * g.n;
        CHECK(maximal == all_dynamo);
        CHECK(maximal == all_contained);
    }
}

TEST_CASE("refine_step moves one vertex and raises eta") {
    const auto g = directed_cycle(3);
    const auto before = partition_of(g, 1, {{0, 1, 2}, {}});
    const auto after = refine_step(g, before);
    CHECK(after.blocks[0] == VertexSet{1, 2});
    CHECK(after.blocks[1] == VertexSet{0});
    CHECK(eta(g, before) == 3);
    CHECK(eta(g, after) == 6);
}

TEST_CASE("refine_step rejects maximal partitions") {
    const auto g = directed_cycle(3);
    const auto maximal = partition_of(g, 1, {{0}, {1, 2}});
    REQUIRE(eta(g, maximal) == 6);
    CHECK_THROWS_AS(refine_step(g, maximal), std::logic_error);
}

TEST_CASE("refine_step breaks destination ties toward the lowest block") {
    const auto k4 = generate({GraphFamily::Complete, 4}, 0);
    const auto before = partition_of(k4, 2, {{0, 1, 2, 3}, {}, {}});
    const auto after = refine_step(k4, before);
    CHECK(after.blocks[0] == VertexSet{1, 2, 3});
    CHECK(after.blocks[1] == VertexSet{0});
    CHECK(after.blocks[2].empty());
    CHECK(eta(k4, after) > eta(k4, before));
}

TEST_CASE("refine_step strictly raises eta on random digraphs") {
    TestRng rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + rng.below(25);
        const int k = 1 + rng.below(2);
        const auto g = random_network(n, 0.15, rng);
        auto p = random_partition(g, k, rng);
        auto value = eta(g, p);
        const std::int64_t full = static_cast<std::int64_t>(k + 1) * g.n;
        int moves = 0;
        while (value < full) {
            p = refine_step(g, p);
            const auto next = eta(g, p);
            CHECK(next > value);
            value = next;
            REQUIRE(++moves <= (k + 1) * g.n);
        }
    }
}

TEST_CASE("find_dynamo_directed on directed cycles with k = 2") {
    for (int n : {3, 5, 8, 13}) {
        const auto g = directed_cycle(n);
        const auto result = find_dynamo_directed(g, 2);
        CHECK(static_cast<int>(result.seeds.size()) <= 2 * n / 3);
        CHECK(is_dynamo(g, result.seeds, ThresholdScenario::fraction(2)));
        CHECK(is_dynamo(g, result.seeds, ThresholdScenario::strict_majority()));
    }
}

TEST_CASE("find_dynamo_directed with k = 1 yields simple-majority dynamos") {
    TestRng rng(34);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4 + rng.below(40);
        const auto g = random_network(n, 0.12, rng);
        const auto result = find_dynamo_directed(g, 1);
        CHECK(static_cast<int>(result.seeds.size()) <= n / 2);
        CHECK(is_dynamo(g, result.seeds, ThresholdScenario::simple_majority()));
        CHECK(result.iterations <= 2 * n);
    }
}

TEST_CASE("find_dynamo_directed matches the oracle on the bidirected triangle") {
    const auto k3 = generate({GraphFamily::Complete, 3}, 0);
    const auto result = find_dynamo_directed(k3, 2);
    CHECK(result.seeds.size() <= 2);
    CHECK(is_dynamo(k3, result.seeds, ThresholdScenario::strict_majority()));
    const auto oracle = min_dynamo_bruteforce(k3, ThresholdScenario::strict_majority(), 3);
    CHECK(oracle.optimum_size == 2);  // the bound is tight here
}

TEST_CASE("find_dynamo_directed across k on random digraphs") {
    TestRng rng(35);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 4 + rng.below(45);
        const auto g = random_network(n, 0.05 + 0.2 * rng.unit(), rng);
        for (int k : {1, 2, 3}) {
            const auto result = find_dynamo_directed(g, k);
            CHECK(static_cast<std::int64_t>(result.seeds.size()) <=
                  static_cast<std::int64_t>(k) * n / (k + 1));
            CHECK(is_dynamo(g, result.seeds, ThresholdScenario::fraction(k)));
            CHECK(result.iterations <= (k + 1) * n);
        }
    }
}

TEST_CASE("find_dynamo_directed rejects zero indegrees") {
    const auto arc = make_graph(2, true, {{0, 1}});
    CHECK_THROWS_AS(find_dynamo_directed(arc, 2), PreconditionError);
}
