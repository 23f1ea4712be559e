#include "dynamo/coloring.hpp"

#include <algorithm>
#include <queue>

namespace dynamo {

ThresholdScenario ThresholdScenario::fraction(int k) {
    if (k < 1) throw std::invalid_argument("fraction scenario needs k >= 1");
    return {Kind::Fraction, k};
}

int ThresholdScenario::required(int indegree) const {
    if (indegree < 1) throw std::invalid_argument("threshold undefined for indegree < 1");
    switch (kind) {
        case Kind::Strict: return (indegree + 2) / 2;                 // ceil((d+1)/2)
        case Kind::Simple: return (indegree + 1) / 2;                 // ceil(d/2)
        case Kind::Fraction: return (indegree * k + k) / (k + 1);     // ceil(d*k/(k+1))
    }
    return indegree;
}

bool ThresholdScenario::activates(int white, int indegree) const {
    switch (kind) {
        case Kind::Strict: return 2 * white >= indegree + 1;
        case Kind::Simple: return 2 * white >= indegree;
        case Kind::Fraction:
            return static_cast<long long>(white) * (k + 1) >= static_cast<long long>(indegree) * k;
    }
    return false;
}

std::string ThresholdScenario::name() const {
    switch (kind) {
        case Kind::Strict: return "strict";
        case Kind::Simple: return "simple";
        case Kind::Fraction: return "fraction(" + std::to_string(k) + "/" + std::to_string(k + 1) + ")";
    }
    return "?";
}

ColoringResult closure(const Graph& g, const VertexSet& seeds, const ThresholdScenario& s) {
    for (int v = 0; v < g.n; ++v)
        if (g.in_degree(v) == 0)
            throw PreconditionError("vertex " + std::to_string(v) +
                                    " has indegree 0; the coloring process is undefined");

    ColoringResult result;
    result.seeds = seeds;
    std::sort(result.seeds.begin(), result.seeds.end());
    result.seeds.erase(std::unique(result.seeds.begin(), result.seeds.end()), result.seeds.end());
    for (int v : result.seeds)
        if (v < 0 || v >= g.n) throw std::invalid_argument("seed out of range: " + std::to_string(v));

    std::vector<char> white(g.n, 0);
    std::vector<int> count(g.n, 0);
    std::queue<int> q;
    for (int v : result.seeds) {
        white[v] = 1;
        q.push(v);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.out_adj[u]) {
            if (white[v]) continue;
            ++count[v];
            if (s.activates(count[v], g.in_degree(v))) {
                white[v] = 1;
                result.trace.push_back({v, count[v]});
                q.push(v);
            }
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (white[v]) result.white.push_back(v);
    return result;
}

bool is_dynamo(const Graph& g, const VertexSet& seeds, const ThresholdScenario& s) {
    return closure(g, seeds, s).covers(g);
}

}  // namespace dynamo
