#include "dynamo/oracle.hpp"

#include <algorithm>

namespace dynamo {

namespace {

VertexSet mask_to_set(std::uint64_t mask) {
    VertexSet s;
    while (mask) {
        const int v = __builtin_ctzll(mask);
        s.push_back(v);
        mask &= mask - 1;
    }
    return s;
}

// Reusable coloring simulator over bitmask seed sets; avoids reallocating
// per subset during the exhaustive sweeps.
class MaskClosure {
public:
    explicit MaskClosure(const Graph& g, const ThresholdScenario& s) : g_(g) {
        required_.resize(g.n);
        for (int v = 0; v < g.n; ++v) required_[v] = s.required(g.in_degree(v));
        white_.resize(g.n);
        count_.resize(g.n);
        queue_.reserve(g.n);
    }

    bool covers(std::uint64_t seed_mask) {
        std::fill(white_.begin(), white_.end(), 0);
        std::fill(count_.begin(), count_.end(), 0);
        queue_.clear();
        int colored = 0;
        for (int v = 0; v < g_.n; ++v)
            if (seed_mask >> v & 1u) {
                white_[v] = 1;
                queue_.push_back(v);
                ++colored;
            }
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const int u = queue_[head];
            for (int v : g_.out_adj[u]) {
                if (white_[v] || ++count_[v] < required_[v]) continue;
                white_[v] = 1;
                queue_.push_back(v);
                ++colored;
            }
        }
        return colored == g_.n;
    }

private:
    const Graph& g_;
    std::vector<int> required_;
    std::vector<char> white_;
    std::vector<int> count_;
    std::vector<int> queue_;
};

// Calls visit(mask) for subsets in cardinality-major order, masks ascending
// within each cardinality (Gosper's hack); stops when visit returns true.
template <typename Visit>
bool enumerate_subsets(int n, int max_size, Visit&& visit) {
    if (visit(0)) return true;
    for (int size = 1; size <= max_size; ++size) {
        std::uint64_t mask = (size == 64) ? ~0ull : (1ull << size) - 1;
        const std::uint64_t limit = (n == 64) ? ~0ull : (1ull << n) - 1;
        for (;;) {
            if (visit(mask)) return true;
            if (mask == (limit & (limit << (n - size)))) break;  // highest mask of this size
            const std::uint64_t low = mask & -mask;
            const std::uint64_t ripple = mask + low;
            mask = ripple | ((mask ^ ripple) >> 2) / low;
        }
    }
    return false;
}

void check_cap(const Graph& g) {
    if (g.n > kOracleMaxVertices)
        throw PreconditionError("brute-force oracle is capped at " +
                                std::to_string(kOracleMaxVertices) + " vertices, got " +
                                std::to_string(g.n));
}

}  // namespace

OracleResult min_dynamo_bruteforce(const Graph& g, const ThresholdScenario& s, int max_size) {
    check_cap(g);
    if (max_size < 0 || max_size > g.n)
        throw std::invalid_argument("max_size must lie in [0, n]");
    for (int v = 0; v < g.n; ++v)
        if (g.in_degree(v) == 0)
            throw PreconditionError("vertex " + std::to_string(v) + " has indegree 0");

    MaskClosure sim(g, s);
    OracleResult result;
    const bool found = enumerate_subsets(g.n, max_size, [&](std::uint64_t mask) {
        ++result.subsets_examined;
        if (!sim.covers(mask)) return false;
        result.witness = mask_to_set(mask);
        result.optimum_size = static_cast<int>(result.witness.size());
        return true;
    });
    result.budget_exhausted = !found;
    return result;
}

OracleResult min_domset_bruteforce(const Graph& g) {
    check_cap(g);
    if (g.directed) throw std::invalid_argument("dominating sets are defined on undirected graphs");

    std::vector<std::uint64_t> closed(g.n);
    for (int v = 0; v < g.n; ++v) {
        closed[v] = 1ull << v;
        for (int u : g.neighbors(v)) closed[v] |= 1ull << u;
    }
    const std::uint64_t full = (g.n == 64) ? ~0ull : (1ull << g.n) - 1;

    OracleResult result;
    enumerate_subsets(g.n, g.n, [&](std::uint64_t mask) {
        ++result.subsets_examined;
        std::uint64_t covered = 0;
        std::uint64_t rest = mask;
        while (rest) {
            covered |= closed[__builtin_ctzll(rest)];
            rest &= rest - 1;
        }
        if (covered != full) return false;
        result.witness = mask_to_set(mask);
        result.optimum_size = static_cast<int>(result.witness.size());
        return true;
    });
    result.budget_exhausted = result.optimum_size < 0;
    return result;
}

}  // namespace dynamo
