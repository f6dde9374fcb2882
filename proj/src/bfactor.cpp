#include "fairsplit/bfactor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "fairsplit/errors.hpp"

namespace fairsplit {

namespace {

class Kuhn {
public:
    Kuhn(const std::vector<std::vector<int>>& adj, int right)
        : adj_(adj), match_left_(adj.size(), -1), match_right_(right, -1), seen_(right, 0) {}

    std::vector<int> solve() {
        for (int u = 0; u < static_cast<int>(adj_.size()); ++u) {
            ++stamp_;
            augment(u);
        }
        return match_left_;
    }

private:
    bool augment(int u) {
        for (int v : adj_[u]) {
            if (seen_[v] == stamp_) continue;
            seen_[v] = stamp_;
            if (match_right_[v] < 0 || augment(match_right_[v])) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<int>>& adj_;
    std::vector<int> match_left_;
    std::vector<int> match_right_;
    std::vector<int> seen_;
    int stamp_ = 0;
};

void validate(const BipartiteGraph& g, const DegreePrescription& b) {
    if (static_cast<int>(b.left.size()) != g.left || static_cast<int>(b.right.size()) != g.right)
        throw PreconditionError("b-factor: prescription does not match the graph");
    for (int d : b.left)
        if (d < 0) throw PreconditionError("b-factor: negative prescription");
    for (int d : b.right)
        if (d < 0) throw PreconditionError("b-factor: negative prescription");
    for (auto [u, v] : g.edges)
        if (u < 0 || u >= g.left || v < 0 || v >= g.right)
            throw PreconditionError("b-factor: edge endpoint out of range");
}

}  // namespace

std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adjacency, int right) {
    return Kuhn(adjacency, right).solve();
}

bool is_b_factor(const BipartiteGraph& graph, const DegreePrescription& b, const std::vector<int>& edges) {
    std::vector<int> dl(graph.left, 0), dr(graph.right, 0);
    std::vector<char> used(graph.edges.size(), 0);
    for (int e : edges) {
        if (e < 0 || e >= static_cast<int>(graph.edges.size()) || used[e]) return false;
        used[e] = 1;
        ++dl[graph.edges[e].first];
        ++dr[graph.edges[e].second];
    }
    return dl == b.left && dr == b.right;
}

BFactorResult find_b_factor(const BipartiteGraph& graph, const DegreePrescription& b) {
    validate(graph, b);
    BFactorResult result;
    const int total_left = std::accumulate(b.left.begin(), b.left.end(), 0);
    const int total_right = std::accumulate(b.right.begin(), b.right.end(), 0);
    const int E = static_cast<int>(graph.edges.size());

    if (total_left == total_right) {
        // Matching sides:
        //   A = copies of left vertices, then one node a_e per edge
        //   B = copies of right vertices, then one node b_e per edge
        // Edge e = (u, v) gives u-copy -- b_e, a_e -- v-copy and a_e -- b_e.
        // In a perfect matching e is chosen iff b_e is matched to a u-copy.
        std::vector<int> left_base(graph.left + 1, 0), right_base(graph.right + 1, 0);
        for (int u = 0; u < graph.left; ++u) left_base[u + 1] = left_base[u] + b.left[u];
        for (int v = 0; v < graph.right; ++v) right_base[v + 1] = right_base[v] + b.right[v];
        const int copies_a = left_base[graph.left], copies_b = right_base[graph.right];

        std::vector<std::vector<int>> adj(copies_a + E);
        for (int e = 0; e < E; ++e) {
            auto [u, v] = graph.edges[e];
            for (int c = left_base[u]; c < left_base[u + 1]; ++c) adj[c].push_back(copies_b + e);
            for (int c = right_base[v]; c < right_base[v + 1]; ++c) adj[copies_a + e].push_back(c);
            adj[copies_a + e].push_back(copies_b + e);
        }
        std::vector<int> match = max_bipartite_matching(adj, copies_b + E);
        if (std::none_of(match.begin(), match.end(), [](int x) { return x < 0; })) {
            std::vector<int> chosen;
            for (int c = 0; c < copies_a; ++c) chosen.push_back(match[c] - copies_b);
            std::sort(chosen.begin(), chosen.end());
            result.edges = std::move(chosen);
            return result;
        }
    }
    if (graph.left + graph.right <= witness_limit) result.witness = criterion_witness(graph, b);
    return result;
}

std::optional<CriterionWitness> criterion_witness(const BipartiteGraph& graph, const DegreePrescription& b) {
    validate(graph, b);
    const int V = graph.left + graph.right;
    if (V > 30) throw InstanceTooLarge("criterion_witness: too many vertices for subset enumeration");
    std::vector<int> weight(V);
    for (int u = 0; u < graph.left; ++u) weight[u] = b.left[u];
    for (int v = 0; v < graph.right; ++v) weight[graph.left + v] = b.right[v];
    const int total = std::accumulate(weight.begin(), weight.end(), 0);

    std::optional<std::uint32_t> best;
    const std::uint32_t limit = std::uint32_t{1} << V;
    for (std::uint32_t X = 0; X < limit; ++X) {
        int spanned = 0, bx = 0;
        for (auto [u, v] : graph.edges)
            if (((X >> u) & 1) && ((X >> (graph.left + v)) & 1)) ++spanned;
        for (int i = 0; i < V; ++i)
            if ((X >> i) & 1) bx += weight[i];
        // spanned >= b(X) - b(V)/2, doubled to stay in integers
        if (2 * spanned < 2 * bx - total) {
            if (!best || std::popcount(X) < std::popcount(*best)) best = X;
        }
    }
    if (!best) return std::nullopt;
    CriterionWitness w;
    for (int i = 0; i < V; ++i)
        if ((*best >> i) & 1) (i < graph.left ? w.left : w.right).push_back(i < graph.left ? i : i - graph.left);
    return w;
}

}  // namespace fairsplit
