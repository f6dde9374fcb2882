#include "fairsplit/rounding.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fairsplit/bfactor.hpp"

namespace fairsplit {

namespace {

void require_acyclic_flow(const ColorFlowGraph& g, const char* who) {
    Violations v = check_flow(g);
    if (!v.empty()) throw PreconditionError(std::string(who) + ": flow equalities fail (" + v.front() + ")");
    if (!is_forest(g)) throw PreconditionError(std::string(who) + ": the flow graph has a cycle");
}

int bead_index(const ColorFlowGraph& g, int bead) {
    return static_cast<int>(std::lower_bound(g.split_beads.begin(), g.split_beads.end(), bead) - g.split_beads.begin());
}

BeadAssignment factor_assignment(const ColorFlowGraph& g, const std::vector<int>& thief_degree, const char* who) {
    BipartiteGraph h;
    h.left = g.q;
    h.right = static_cast<int>(g.split_beads.size());
    for (const auto& e : g.edges) h.edges.emplace_back(e.thief, bead_index(g, e.bead));
    DegreePrescription b{thief_degree, std::vector<int>(h.right, 1)};
    BFactorResult f = find_b_factor(h, b);
    if (!f) throw InvariantError(std::string(who) + ": no b-factor although one must exist");
    BeadAssignment out;
    for (int e : *f.edges) out[g.edges[e].bead] = g.edges[e].thief;
    return out;
}

}  // namespace

BeadAssignment round_color_r1(const ColorFlowGraph& g, int chosen) {
    if (g.remainder != 1) throw PreconditionError("round_color_r1: remainder must be 1");
    if (chosen < 0 || chosen >= g.q) throw PreconditionError("round_color_r1: chosen thief out of range");
    require_acyclic_flow(g, "round_color_r1");
    std::int64_t alpha_sum = std::accumulate(g.alpha.begin(), g.alpha.end(), std::int64_t{0});
    if (static_cast<std::int64_t>(g.split_beads.size()) != alpha_sum + 1)
        throw PreconditionError("round_color_r1: |B_j| differs from sum of alpha + 1");
    std::vector<int> degree(g.alpha.begin(), g.alpha.end());
    ++degree[chosen];
    return factor_assignment(g, degree, "round_color_r1");
}

BeadAssignment round_color_rq1(const ColorFlowGraph& g, int disadvantaged) {
    if (g.remainder != g.q - 1) throw PreconditionError("round_color_rq1: remainder must be q-1");
    if (disadvantaged < 0 || disadvantaged >= g.q)
        throw PreconditionError("round_color_rq1: disadvantaged thief out of range");
    require_acyclic_flow(g, "round_color_rq1");
    // consequence of acyclicity: exactly q-1 split beads and no integer parts
    if (static_cast<int>(g.split_beads.size()) != g.q - 1 ||
        std::any_of(g.alpha.begin(), g.alpha.end(), [](std::int64_t a) { return a != 0; }))
        throw InvariantError("round_color_rq1: acyclic graph without |B_j| = q-1 and alpha = 0");

    std::vector<std::vector<int>> adjacency(g.split_beads.size());
    for (const auto& e : g.edges)
        if (e.thief != disadvantaged) adjacency[bead_index(g, e.bead)].push_back(e.thief);
    std::vector<int> match = max_bipartite_matching(adjacency, g.q);
    BeadAssignment out;
    for (std::size_t b = 0; b < match.size(); ++b) {
        if (match[b] < 0) throw InvariantError("round_color_rq1: Hall condition failed");
        out[g.split_beads[b]] = match[b];
    }
    return out;
}

BeadAssignment round_color_r0(const ColorFlowGraph& g) {
    if (g.remainder != 0) throw PreconditionError("round_color_r0: remainder must be 0");
    require_acyclic_flow(g, "round_color_r0");
    if (g.split_beads.empty()) return {};
    return factor_assignment(g, std::vector<int>(g.alpha.begin(), g.alpha.end()), "round_color_r0");
}

namespace {

void check_remainders(const Necklace& neck) {
    std::vector<int> bad;
    for (int j = 0; j < neck.colors(); ++j) {
        int r = neck.remainder(j);
        if (r != 0 && r != 1 && r != neck.thieves() - 1) bad.push_back(j);
    }
    if (bad.empty()) return;
    std::string list;
    for (int j : bad) list += (list.empty() ? "" : ", ") + std::to_string(j + 1);
    throw RemainderError("remainder outside {0, 1, q-1} for color(s) " + list, bad);
}

}  // namespace

SplitTrace split_with_advantages_from(const Necklace& neck, const AdvantageSpec& advantages,
                                      const ContinuousSplitting& continuous) {
    check_remainders(neck);
    AdvantageSpec full = complete_advantages(neck, advantages);
    Violations v = verify_continuous(continuous, neck);
    if (!v.empty()) throw PreconditionError("split_with_advantages: continuous splitting is not fair (" + v.front() + ")");

    SplitTrace trace;
    trace.continuous = continuous;
    trace.acyclic = cancel_cycles(continuous, neck);
    const Allocation alloc = allocation(trace.acyclic, neck);
    const int q = neck.thieves();

    trace.rounding.resize(neck.colors());
    for (int j = 0; j < neck.colors(); ++j) {
        ColorFlowGraph g = build_flow_graph(alloc, neck, j);
        if (g.split_beads.empty()) continue;
        const int r = g.remainder;
        if (r == 0) {
            trace.rounding[j] = round_color_r0(g);
        } else if (r == 1) {
            trace.rounding[j] = round_color_r1(g, full.advantaged.at(j).front());
        } else {
            const auto& adv = full.advantaged.at(j);
            int left_out = 0;
            while (std::find(adv.begin(), adv.end(), left_out) != adv.end()) ++left_out;
            trace.rounding[j] = round_color_rq1(g, left_out);
        }
    }

    trace.split.owner.assign(neck.size(), -1);
    for (int k = 0; k < neck.size(); ++k) {
        const auto& rounded = trace.rounding[neck.color(k)];
        if (auto it = rounded.find(k); it != rounded.end()) {
            trace.split.owner[k] = it->second;
            continue;
        }
        for (int t = 0; t < q; ++t)
            if (alloc[t][k] == Rational(1)) trace.split.owner[k] = t;
        if (trace.split.owner[k] < 0)
            throw InvariantError("split_with_advantages: bead " + std::to_string(k + 1) + " left unassigned");
    }

    Violations check = verify_discrete(neck, full, trace.split);
    if (!check.empty()) throw InvariantError("split_with_advantages: rounded splitting fails (" + check.front() + ")");
    if (trace.split.cuts() > static_cast<int>(trace.acyclic.cuts.size()))
        throw InvariantError("split_with_advantages: rounding added cuts");
    return trace;
}

SplitTrace split_with_advantages_traced(const Necklace& neck, const AdvantageSpec& advantages, std::uint64_t budget) {
    check_remainders(neck);
    validate_advantages(neck, advantages);
    return split_with_advantages_from(neck, advantages, search_continuous(neck, budget));
}

DiscreteSplitting split_with_advantages(const Necklace& neck, const AdvantageSpec& advantages) {
    return split_with_advantages_traced(neck, advantages).split;
}

R2FailureReport demonstrate_r2_failure(std::vector<int> target) {
    Necklace neck({0, 0}, 4);
    ContinuousSplitting cont{{Rational(1, 2), Rational(1), Rational(3, 2)}, {0, 1, 2, 3}};
    std::sort(target.begin(), target.end());
    for (std::size_t i = 0; i < target.size(); ++i)
        if (target[i] < 0 || target[i] >= 4 || (i > 0 && target[i] == target[i - 1]))
            throw PreconditionError("demonstrate_r2_failure: target must be distinct thieves in 1..4");

    ColorFlowGraph g = build_flow_graph(cont, neck, 0);
    std::vector<std::vector<int>> sharers;
    for (int k : g.split_beads) {
        sharers.emplace_back();
        for (int e : g.bead_edges(k)) sharers.back().push_back(g.edges[e].thief);
    }

    R2FailureReport report{neck, cont, target, {}, false, {}};
    std::vector<int> pick(sharers.size(), 0);
    while (true) {
        std::vector<int> owner(neck.size(), -1);
        for (std::size_t b = 0; b < sharers.size(); ++b) owner[g.split_beads[b]] = sharers[b][pick[b]];
        std::vector<int> beads_held(4, 0);
        for (int t : owner) ++beads_held[t];
        bool meets = std::all_of(target.begin(), target.end(), [&](int t) { return beads_held[t] == 1; });
        if (meets && !report.achievable) {
            report.achievable = true;
            report.witness = owner;
        }
        report.outcomes.push_back(owner);
        std::size_t b = 0;
        while (b < pick.size() && ++pick[b] == static_cast<int>(sharers[b].size())) pick[b++] = 0;
        if (b == pick.size()) break;
    }
    return report;
}

}  // namespace fairsplit
