#include "dynamo/digraph_dynamo.hpp"

#include <algorithm>
#include <optional>

namespace dynamo {

namespace {

std::vector<int> block_membership(const Graph& g, const Partition& p) {
    std::vector<int> block_of(g.n, -1);
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        for (int v : p.blocks[i]) {
            if (v < 0 || v >= g.n) throw std::invalid_argument("partition vertex out of range");
            if (block_of[v] != -1) throw std::invalid_argument("vertex in two partition blocks");
            block_of[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (block_of[v] == -1) throw std::invalid_argument("partition does not cover vertex " + std::to_string(v));
    return block_of;
}

// White flags of c(V \ V_i) for every block, plus the scenario in use.
struct ComplementClosures {
    std::vector<std::vector<char>> white;  // one flag vector per block
    std::int64_t eta = 0;
};

ComplementClosures complement_closures(const Graph& g, const Partition& p,
                                       const std::vector<int>& block_of) {
    ComplementClosures cc;
    const auto scenario = ThresholdScenario::fraction(p.k);
    cc.white.resize(p.blocks.size());
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        VertexSet seeds;
        seeds.reserve(g.n - p.blocks[i].size());
        for (int v = 0; v < g.n; ++v)
            if (block_of[v] != static_cast<int>(i)) seeds.push_back(v);
        const auto result = closure(g, seeds, scenario);
        cc.eta += static_cast<std::int64_t>(result.white.size());
        auto& flags = cc.white[i];
        flags.assign(g.n, 0);
        for (int v : result.white) flags[v] = 1;
    }
    return cc;
}

struct Move {
    int from_block;
    int to_block;
    VertexId vertex;
};

// The potential-increasing move, or nothing when eta is already maximal.
// Deterministic choices: smallest deficient block, smallest uncolored vertex,
// smallest argmin block for the destination.
std::optional<Move> pick_move(const Graph& g, const Partition& p,
                              const std::vector<int>& block_of, const ComplementClosures& cc) {
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        for (int v : p.blocks[i]) {
            if (cc.white[i][v]) continue;
            // v is not colored by the complement of its own block.
            std::vector<int> in_count(p.blocks.size(), 0);
            for (int u : g.in_adj[v]) ++in_count[block_of[u]];
            int best = -1;
            for (std::size_t j = 0; j < p.blocks.size(); ++j) {
                if (j == i) continue;
                if (best == -1 || in_count[j] < in_count[best]) best = static_cast<int>(j);
            }
            // Pigeonhole over the k other blocks: some block sees fewer than
            // deg_in(v)/(k+1) of v's in-neighbors.
            if (static_cast<long long>(in_count[best]) * (p.k + 1) >= g.in_degree(v))
                throw std::logic_error("refinement move lost its pigeonhole guarantee");
            return Move{static_cast<int>(i), best, v};
        }
    }
    return std::nullopt;
}

Partition apply_move(const Partition& p, const Move& m) {
    Partition next = p;
    auto& from = next.blocks[m.from_block];
    from.erase(std::find(from.begin(), from.end(), m.vertex));
    auto& to = next.blocks[m.to_block];
    to.insert(std::upper_bound(to.begin(), to.end(), m.vertex), m.vertex);
    return next;
}

}  // namespace

Partition initial_partition(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("partition needs k >= 1");
    Partition p;
    p.k = k;
    p.blocks.assign(k + 1, {});
    p.blocks[0].resize(g.n);
    for (int v = 0; v < g.n; ++v) p.blocks[0][v] = v;
    return p;
}

void check_partition(const Graph& g, const Partition& p) {
    if (p.k < 1) throw std::invalid_argument("partition needs k >= 1");
    if (static_cast<int>(p.blocks.size()) != p.k + 1)
        throw std::invalid_argument("partition needs exactly k+1 blocks");
    for (const auto& block : p.blocks)
        if (!std::is_sorted(block.begin(), block.end()))
            throw std::invalid_argument("partition blocks must be sorted");
    block_membership(g, p);
}

std::int64_t eta(const Graph& g, const Partition& p) {
    check_partition(g, p);
    const auto block_of = block_membership(g, p);
    return complement_closures(g, p, block_of).eta;
}

Partition refine_step(const Graph& g, const Partition& p) {
    check_partition(g, p);
    const auto block_of = block_membership(g, p);
    const auto cc = complement_closures(g, p, block_of);
    const auto move = pick_move(g, p, block_of, cc);
    if (!move) throw std::logic_error("refine_step called on a partition with maximal eta");
    return apply_move(p, *move);
}

DirectedDynamoResult find_dynamo_directed(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("find_dynamo_directed needs k >= 1");
    const auto scenario = ThresholdScenario::fraction(k);
    const std::int64_t full = static_cast<std::int64_t>(k + 1) * g.n;
    const int max_steps = (k + 1) * g.n;

    Partition p = initial_partition(g, k);
    DirectedDynamoResult result;
    std::int64_t prev_eta = -1;
    for (;;) {
        const auto block_of = block_membership(g, p);
        const auto cc = complement_closures(g, p, block_of);
        if (cc.eta <= prev_eta) throw std::logic_error("eta failed to increase");
        prev_eta = cc.eta;
        if (cc.eta == full) break;
        const auto move = pick_move(g, p, block_of, cc);
        if (!move) throw std::logic_error("eta below maximum but no move available");
        p = apply_move(p, *move);
        if (++result.iterations > max_steps)
            throw std::logic_error("refinement exceeded its (k+1)*n step bound");
    }

    // Smallest complement; ties go to the smallest block index.
    int best = 0;
    for (int i = 1; i <= k; ++i)
        if (p.blocks[i].size() > p.blocks[best].size()) best = i;
    VertexSet seeds;
    seeds.reserve(g.n - p.blocks[best].size());
    std::vector<char> in_best(g.n, 0);
    for (int v : p.blocks[best]) in_best[v] = 1;
    for (int v = 0; v < g.n; ++v)
        if (!in_best[v]) seeds.push_back(v);

    if (!is_dynamo(g, seeds, scenario))
        throw std::logic_error("refined seed set failed dynamo verification");
    if (static_cast<std::int64_t>(seeds.size()) * (k + 1) > static_cast<std::int64_t>(k) * g.n)
        throw std::logic_error("refined seed set exceeds the k/(k+1) bound");
    result.seeds = std::move(seeds);
    return result;
}

}  // namespace dynamo
