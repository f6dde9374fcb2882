#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace fairsplit {

// Simple bipartite graph; left vertices 0..left-1, right vertices 0..right-1.
struct BipartiteGraph {
    int left = 0;
    int right = 0;
    std::vector<std::pair<int, int>> edges;  // (left, right), no duplicates
};

struct DegreePrescription {
    std::vector<int> left;
    std::vector<int> right;
};

// Vertex set X of the spanning criterion, split by side.
struct CriterionWitness {
    std::vector<int> left;
    std::vector<int> right;
};

struct BFactorResult {
    std::optional<std::vector<int>> edges;  // indices into graph.edges, ascending
    std::optional<CriterionWitness> witness;  // only when no factor exists and the graph is small

    explicit operator bool() const { return edges.has_value(); }
};

// Maximum matching by augmenting paths. adjacency[u] lists the right
// neighbours of left vertex u in preference order. Returns, per left
// vertex, the matched right vertex or -1.
std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adjacency, int right);

// Exact b-factor: every vertex v meets exactly b(v) chosen edges. Reduced to
// a perfect matching on vertex copies plus one gadget pair per edge. When
// none exists and the graph has at most witness_limit vertices, a set X
// spanning fewer than b(X) - b(V)/2 edges is attached.
BFactorResult find_b_factor(const BipartiteGraph& graph, const DegreePrescription& b);

inline constexpr int witness_limit = 20;

// First X (by size, then lexicographic bitmask) violating the spanning
// criterion, or nullopt if the criterion holds. Exponential; small graphs only.
std::optional<CriterionWitness> criterion_witness(const BipartiteGraph& graph,
                                                  const DegreePrescription& b);

// Degree check of a candidate edge set against b.
bool is_b_factor(const BipartiteGraph& graph, const DegreePrescription& b,
                 const std::vector<int>& edges);

}  // namespace fairsplit
