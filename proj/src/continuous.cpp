#include "fairsplit/necklace.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "fairsplit/errors.hpp"

namespace fairsplit {

namespace {

struct Segment {
    int owner;
    Rational start;
    Rational end;
};

std::vector<Segment> segments(const ContinuousSplitting& cont, int n, int q) {
    if (cont.owners.size() != cont.cuts.size() + 1)
        throw PreconditionError("continuous splitting: need one owner per segment");
    for (int t : cont.owners)
        if (t < 0 || t >= q) throw PreconditionError("continuous splitting: owner out of range");
    std::vector<Segment> segs;
    Rational prev = 0;
    for (std::size_t i = 0; i <= cont.cuts.size(); ++i) {
        Rational next = i < cont.cuts.size() ? cont.cuts[i] : Rational(n);
        if (next < prev || next > n) throw PreconditionError("continuous splitting: cuts out of order or range");
        segs.push_back({cont.owners[i], prev, next});
        prev = next;
    }
    return segs;
}

// Positive-length pieces of each bead, left to right, with their owners.
using Pieces = std::vector<std::vector<std::pair<int, Rational>>>;

Pieces bead_pieces(const ContinuousSplitting& cont, const Necklace& neck) {
    Pieces pieces(neck.size());
    for (const Segment& s : segments(cont, neck.size(), neck.thieves())) {
        if (s.end <= s.start) continue;
        auto first = static_cast<int>(s.start.numerator() / s.start.denominator());
        for (int k = first; k < neck.size() && Rational(k) < s.end; ++k) {
            Rational len = std::min(s.end, Rational(k + 1)) - std::max(s.start, Rational(k));
            if (len > 0) pieces[k].emplace_back(s.owner, len);
        }
    }
    return pieces;
}

ContinuousSplitting from_pieces(const Pieces& pieces) {
    ContinuousSplitting out;
    Rational pos = 0;
    for (const auto& bead : pieces) {
        for (const auto& [owner, len] : bead) {
            if (len == Rational(0)) continue;
            if (out.owners.empty()) out.owners.push_back(owner);
            else if (out.owners.back() != owner) {
                out.cuts.push_back(pos);
                out.owners.push_back(owner);
            }
            pos += len;
        }
    }
    return out;
}

// Tiny Edmonds-Karp on integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : head_(nodes, -1) {}

    int add_edge(int from, int to, int cap) {
        edges_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(edges_.size()) - 1;
        return static_cast<int>(edges_.size()) - 2;
    }

    int flow_on(int edge) const { return edges_[edge ^ 1].cap; }

    int run(int source, int sink) {
        int total = 0;
        std::vector<int> via(head_.size());
        while (true) {
            std::fill(via.begin(), via.end(), -1);
            std::deque<int> queue{source};
            via[source] = -2;
            while (!queue.empty() && via[sink] == -1) {
                int u = queue.front();
                queue.pop_front();
                for (int e = head_[u]; e >= 0; e = edges_[e].next)
                    if (edges_[e].cap > 0 && via[edges_[e].to] == -1) {
                        via[edges_[e].to] = e;
                        queue.push_back(edges_[e].to);
                    }
            }
            if (via[sink] == -1) return total;
            int push = std::numeric_limits<int>::max();
            for (int v = sink; v != source; v = edges_[via[v] ^ 1].to) push = std::min(push, edges_[via[v]].cap);
            for (int v = sink; v != source; v = edges_[via[v] ^ 1].to) {
                edges_[via[v]].cap -= push;
                edges_[via[v] ^ 1].cap += push;
            }
            total += push;
        }
    }

private:
    struct Edge {
        int to;
        int next;
        int cap;
    };
    std::vector<int> head_;
    std::vector<Edge> edges_;
};

}  // namespace

Allocation allocation(const ContinuousSplitting& cont, const Necklace& neck) {
    Allocation alloc(neck.thieves(), std::vector<Rational>(neck.size(), 0));
    Pieces pieces = bead_pieces(cont, neck);
    for (int k = 0; k < neck.size(); ++k)
        for (const auto& [owner, len] : pieces[k]) alloc[owner][k] += len;
    return alloc;
}

Violations verify_continuous(const ContinuousSplitting& cont, const Necklace& neck) {
    Violations out;
    try {
        segments(cont, neck.size(), neck.thieves());
    } catch (const PreconditionError&) {
        out.push_back("shape");
        return out;
    }
    for (std::size_t i = 0; i < cont.cuts.size(); ++i)
        if (cont.cuts[i] <= 0 || cont.cuts[i] >= neck.size() || (i > 0 && cont.cuts[i] <= cont.cuts[i - 1]))
            out.push_back("shape");
    for (std::size_t i = 1; i < cont.owners.size(); ++i)
        if (cont.owners[i] == cont.owners[i - 1]) out.push_back("shape");
    if (!out.empty()) {
        out.resize(1);
        return out;
    }
    Allocation alloc = allocation(cont, neck);
    for (int j = 0; j < neck.colors(); ++j) {
        Rational target(neck.count(j), neck.thieves());
        for (int t = 0; t < neck.thieves(); ++t) {
            Rational held = 0;
            for (int k = 0; k < neck.size(); ++k)
                if (neck.color(k) == j) held += alloc[t][k];
            if (held != target) {
                out.push_back("fairness color " + std::to_string(j + 1));
                break;
            }
        }
    }
    if (static_cast<int>(cont.cuts.size()) > (neck.thieves() - 1) * neck.colors()) out.push_back("cut bound");
    return out;
}

ContinuousSplitting canonicalize(const ContinuousSplitting& cont) {
    ContinuousSplitting out;
    Rational start = 0;
    for (std::size_t i = 0; i < cont.owners.size(); ++i) {
        bool last = i == cont.cuts.size();
        Rational end = last ? Rational(-1) : cont.cuts[i];
        if (!last && end == start) continue;  // zero-length segment
        if (out.owners.empty() || out.owners.back() != cont.owners[i]) {
            if (!out.owners.empty()) out.cuts.push_back(start);
            out.owners.push_back(cont.owners[i]);
        }
        if (!last) start = end;
    }
    return out;
}

// ---------------------------------------------------------------- search

namespace {

class ContinuousSearch {
public:
    ContinuousSearch(const Necklace& neck, std::uint64_t budget, ContinuousSearchStats& stats)
        : neck_(neck), budget_(budget), stats_(stats), q_(neck.thieves()), m_(neck.colors()) {}

    std::optional<ContinuousSplitting> run() {
        const int max_len = (q_ - 1) * m_ + 1;
        for (int len = q_; len <= max_len; ++len) {
            pattern_.assign(len, 0);
            if (extend_pattern(1, 1)) return result_;
        }
        return std::nullopt;
    }

private:
    // Patterns start with thief 0 and introduce thieves in increasing order.
    bool extend_pattern(int i, int used) {
        if (i == static_cast<int>(pattern_.size())) {
            if (used != q_) return false;
            if (++stats_.patterns > budget_)
                throw BudgetExceeded("search_continuous: more than " + std::to_string(budget_) + " owner patterns");
            return try_pattern();
        }
        // every thief must still fit in the remaining slots
        if (q_ - used > static_cast<int>(pattern_.size()) - i) return false;
        for (int t = 0; t < std::min(used + 1, q_); ++t) {
            if (t == pattern_[i - 1]) continue;
            pattern_[i] = t;
            if (extend_pattern(i + 1, std::max(used, t + 1))) return true;
        }
        return false;
    }

    bool try_pattern() {
        const int cuts = static_cast<int>(pattern_.size()) - 1;
        bead_of_cut_.assign(cuts, 0);
        base_.assign(static_cast<std::size_t>(q_) * m_, 0);
        return place_cut(0, 0);
    }

    int& base(int thief, int color) { return base_[static_cast<std::size_t>(thief) * m_ + color]; }

    // Whole beads [from, to) go to the segment owner; false if someone overshoots.
    bool credit(int owner, int from, int to, int sign) {
        bool ok = true;
        for (int k = from; k < to; ++k) {
            int& b = base(owner, neck_.color(k));
            b += sign;
            if (q_ * b > neck_.count(neck_.color(k))) ok = false;
        }
        return ok;
    }

    bool place_cut(int i, int from) {
        const int cuts = static_cast<int>(bead_of_cut_.size());
        // whole beads between the previous cut's bead and this one
        const int prev_bead = i == 0 ? -1 : bead_of_cut_[i - 1];
        if (i == cuts) {
            int start = cuts == 0 ? 0 : prev_bead + 1;
            bool ok = credit(pattern_[i], start, neck_.size(), +1);
            bool found = ok && feasible();
            credit(pattern_[i], start, neck_.size(), -1);
            return found;
        }
        for (int k = from; k < neck_.size(); ++k) {
            int start = i == 0 ? 0 : prev_bead + 1;
            int end = std::max(start, k);
            bool ok = credit(pattern_[i], start, end, +1);
            bead_of_cut_[i] = k;
            bool found = ok && place_cut(i + 1, k);
            credit(pattern_[i], start, end, -1);
            if (found) return true;
            if (!ok) break;  // moving the cut further right only adds more
        }
        return false;
    }

    // Transportation problem per color on the beads that contain cuts.
    bool feasible() {
        ++stats_.placements;
        const int n = neck_.size();
        // owners of the pieces of each cut bead
        std::vector<std::vector<int>> sharers(n);
        for (int i = 0; i < static_cast<int>(bead_of_cut_.size()); ++i) {
            auto& s = sharers[bead_of_cut_[i]];
            if (s.empty()) s.push_back(pattern_[i]);
            s.push_back(pattern_[i + 1]);
        }
        flows_.assign(n, {});
        for (int j = 0; j < m_; ++j) {
            std::vector<int> cut_beads;
            for (int k = 0; k < n; ++k)
                if (neck_.color(k) == j && !sharers[k].empty()) cut_beads.push_back(k);
            const int source = 0, sink = 1, bead0 = 2, thief0 = 2 + static_cast<int>(cut_beads.size());
            MaxFlow flow(thief0 + q_);
            int demand_total = 0;
            for (int t = 0; t < q_; ++t) {
                int demand = neck_.count(j) - q_ * base(t, j);
                if (demand < 0) return false;
                if (demand > 0) flow.add_edge(thief0 + t, sink, demand);
                demand_total += demand;
            }
            std::vector<std::vector<std::pair<int, int>>> arcs(cut_beads.size());
            for (std::size_t b = 0; b < cut_beads.size(); ++b) {
                flow.add_edge(source, bead0 + static_cast<int>(b), q_);
                std::vector<int> owners = sharers[cut_beads[b]];
                std::sort(owners.begin(), owners.end());
                owners.erase(std::unique(owners.begin(), owners.end()), owners.end());
                for (int t : owners) arcs[b].emplace_back(t, flow.add_edge(bead0 + static_cast<int>(b), thief0 + t, q_));
            }
            if (flow.run(source, sink) != demand_total) return false;
            for (std::size_t b = 0; b < cut_beads.size(); ++b)
                for (auto [t, e] : arcs[b]) flows_[cut_beads[b]].emplace_back(t, flow.flow_on(e));
        }
        build_result(sharers);
        return true;
    }

    void build_result(const std::vector<std::vector<int>>& sharers) {
        const int n = neck_.size();
        Pieces pieces(n);
        int seg = 0;
        for (int k = 0; k < n; ++k) {
            if (sharers[k].empty()) {
                pieces[k].emplace_back(pattern_[seg], Rational(1));
                continue;
            }
            // a thief's whole share of the bead goes into its first piece
            std::vector<std::pair<int, int>> left = flows_[k];
            for (int owner : sharers[k]) {
                int units = 0;
                for (auto& [t, f] : left)
                    if (t == owner) std::swap(units, f);
                pieces[k].emplace_back(owner, Rational(units, q_));
            }
            seg += static_cast<int>(sharers[k].size()) - 1;
        }
        result_ = from_pieces(pieces);
    }

    const Necklace& neck_;
    std::uint64_t budget_;
    ContinuousSearchStats& stats_;
    int q_;
    int m_;
    std::vector<int> pattern_;
    std::vector<int> bead_of_cut_;
    std::vector<int> base_;
    std::vector<std::vector<std::pair<int, int>>> flows_;
    ContinuousSplitting result_;
};

}  // namespace

ContinuousSplitting search_continuous(const Necklace& neck, std::uint64_t budget, ContinuousSearchStats* stats) {
    ContinuousSearchStats local;
    ContinuousSearchStats& s = stats ? *stats : local;
    auto found = ContinuousSearch(neck, budget, s).run();
    if (!found)
        throw InvariantError("search_continuous: no continuous fair splitting with at most (q-1)m cuts found");
    return *found;
}

// ---------------------------------------------------------------- flow graphs

std::vector<int> ColorFlowGraph::bead_edges(int bead) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (edges[e].bead == bead) out.push_back(e);
    return out;
}

std::vector<int> ColorFlowGraph::thief_edges(int thief) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (edges[e].thief == thief) out.push_back(e);
    return out;
}

ColorFlowGraph build_flow_graph(const Allocation& alloc, const Necklace& neck, int color) {
    if (color < 0 || color >= neck.colors()) throw PreconditionError("build_flow_graph: no such color");
    ColorFlowGraph g;
    g.color = color;
    g.q = neck.thieves();
    g.remainder = neck.remainder(color);
    std::vector<Rational> held(g.q, 0);
    for (int k = 0; k < neck.size(); ++k) {
        if (neck.color(k) != color) continue;
        int sharers = 0;
        Rational total = 0;
        for (int t = 0; t < g.q; ++t) {
            total += alloc[t][k];
            if (alloc[t][k] > 0) ++sharers;
        }
        if (total != Rational(1)) throw InvariantError("build_flow_graph: bead " + std::to_string(k + 1) + " is not fully allocated");
        if (sharers < 2) continue;
        g.split_beads.push_back(k);
        for (int t = 0; t < g.q; ++t)
            if (alloc[t][k] > 0) {
                g.edges.push_back({t, k, alloc[t][k]});
                held[t] += alloc[t][k];
            }
    }
    for (int t = 0; t < g.q; ++t) {
        Rational a = held[t] - Rational(g.remainder, g.q);
        if (a.denominator() != 1 || a < 0)
            throw InvariantError("build_flow_graph: thief " + std::to_string(t + 1) + " holds " + to_string(held[t]) +
                                 " of the split beads of color " + std::to_string(color + 1) +
                                 ", not an integer plus r/q");
        g.alpha.push_back(a.numerator());
    }
    return g;
}

ColorFlowGraph build_flow_graph(const ContinuousSplitting& cont, const Necklace& neck, int color) {
    return build_flow_graph(allocation(cont, neck), neck, color);
}

Violations check_flow(const ColorFlowGraph& g) {
    Violations out;
    Rational total = 0;
    for (const auto& e : g.edges) {
        total += e.amount;
        if (e.amount <= 0 || e.amount >= 1) {
            out.push_back("edge range");
            break;
        }
    }
    if (total != static_cast<std::int64_t>(g.split_beads.size())) out.push_back("edge total");
    for (int k : g.split_beads) {
        Rational s = 0;
        auto incident = g.bead_edges(k);
        for (int e : incident) s += g.edges[e].amount;
        if (s != Rational(1)) out.push_back("bead " + std::to_string(k + 1));
        if (incident.size() < 2) out.push_back("degree");
    }
    if (static_cast<int>(g.alpha.size()) != g.q) {
        out.push_back("alpha size");
        return out;
    }
    for (int t = 0; t < g.q; ++t) {
        Rational s = 0;
        auto incident = g.thief_edges(t);
        for (int e : incident) s += g.edges[e].amount;
        if (g.alpha[t] < 0) out.push_back("alpha " + std::to_string(t + 1));
        if (s != Rational(g.alpha[t]) + Rational(g.remainder, g.q)) out.push_back("thief " + std::to_string(t + 1));
        if (!incident.empty() && static_cast<std::int64_t>(incident.size()) < g.alpha[t] + 1) out.push_back("degree");
    }
    return out;
}

namespace {

int node_of_bead(const ColorFlowGraph& g, int bead) {
    auto it = std::lower_bound(g.split_beads.begin(), g.split_beads.end(), bead);
    return g.q + static_cast<int>(it - g.split_beads.begin());
}

// Edge indices of one cycle in traversal order, or empty for a forest.
std::vector<int> find_cycle(const ColorFlowGraph& g) {
    const int nodes = g.q + static_cast<int>(g.split_beads.size());
    std::vector<std::vector<std::pair<int, int>>> adj(nodes);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        int a = g.edges[e].thief, b = node_of_bead(g, g.edges[e].bead);
        adj[a].emplace_back(b, e);
        adj[b].emplace_back(a, e);
    }
    std::vector<int> parent_edge(nodes, -1), depth(nodes, -1);
    for (int root = 0; root < nodes; ++root) {
        if (depth[root] >= 0) continue;
        std::vector<int> stack{root};
        depth[root] = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, e] : adj[u]) {
                if (e == parent_edge[u]) continue;
                if (depth[v] < 0) {
                    depth[v] = depth[u] + 1;
                    parent_edge[v] = e;
                    stack.push_back(v);
                    continue;
                }
                // non-tree edge closes a cycle: climb both ends to the meeting point
                std::vector<int> up_u, up_v;
                int a = u, b = v;
                auto other = [&](int node, int edge) {
                    int t = g.edges[edge].thief, k = node_of_bead(g, g.edges[edge].bead);
                    return node == t ? k : t;
                };
                while (a != b) {
                    if (depth[a] >= depth[b]) {
                        up_u.push_back(parent_edge[a]);
                        a = other(a, parent_edge[a]);
                    } else {
                        up_v.push_back(parent_edge[b]);
                        b = other(b, parent_edge[b]);
                    }
                }
                // v -> u via e, u up to the meeting point, back down to v
                std::vector<int> ordered;
                ordered.push_back(e);
                for (int x : up_u) ordered.push_back(x);
                for (auto it = up_v.rbegin(); it != up_v.rend(); ++it) ordered.push_back(*it);
                return ordered;
            }
        }
    }
    return {};
}

}  // namespace

bool is_forest(const ColorFlowGraph& g) {
    const int nodes = g.q + static_cast<int>(g.split_beads.size());
    std::vector<int> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges) {
        int a = find(e.thief), b = find(node_of_bead(g, e.bead));
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

ContinuousSplitting cancel_cycles(const ContinuousSplitting& cont, const Necklace& neck) {
    Allocation alloc = allocation(cont, neck);
    for (int j = 0; j < neck.colors(); ++j) {
        while (true) {
            ColorFlowGraph g = build_flow_graph(alloc, neck, j);
            std::vector<int> cycle = find_cycle(g);
            if (cycle.empty()) break;
            // the lowest-index edge of the cycle gains flow; signs alternate from it
            auto lowest = std::min_element(cycle.begin(), cycle.end());
            std::rotate(cycle.begin(), lowest, cycle.end());
            Rational step = 1;
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                const Rational& u = g.edges[cycle[i]].amount;
                step = std::min(step, i % 2 == 0 ? 1 - u : u);
            }
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                const FlowEdge& e = g.edges[cycle[i]];
                alloc[e.thief][e.bead] += i % 2 == 0 ? step : -step;
            }
        }
    }

    Pieces pieces = bead_pieces(cont, neck);
    for (int k = 0; k < neck.size(); ++k) {
        std::vector<bool> given(neck.thieves(), false);
        for (auto& [owner, len] : pieces[k]) {
            len = given[owner] ? Rational(0) : alloc[owner][k];
            given[owner] = true;
        }
    }
    return from_pieces(pieces);
}

}  // namespace fairsplit
