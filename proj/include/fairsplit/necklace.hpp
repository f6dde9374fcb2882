#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairsplit/rational.hpp"

namespace fairsplit {

// Open necklace: beads 0..n-1 left to right, colors 0..m-1, q thieves 0..q-1.
class Necklace {
public:
    // Throws PreconditionError if q < 2, beads is empty, or a color is missing.
    Necklace(std::vector<int> beads, int q);

    int size() const { return static_cast<int>(beads_.size()); }
    int colors() const { return static_cast<int>(count_.size()); }
    int thieves() const { return q_; }
    int color(int bead) const { return beads_[bead]; }
    const std::vector<int>& beads() const { return beads_; }
    int count(int color) const { return count_[color]; }
    int remainder(int color) const { return count_[color] % q_; }
    int floor_share(int color) const { return count_[color] / q_; }
    int ceil_share(int color) const { return (count_[color] + q_ - 1) / q_; }

private:
    std::vector<int> beads_;
    int q_;
    std::vector<int> count_;
};

// r_j = a_j mod q for every color.
std::vector<int> remainders(const Necklace& neck);

// For each color with r_j != 0, the r_j thieves receiving ceil(a_j/q).
struct AdvantageSpec {
    std::map<int, std::vector<int>> advantaged;
};

// Throws PreconditionError when a listed color has r_j = 0, a list has the
// wrong size, or a thief repeats or is out of range. Colors with r_j != 0
// may be absent (unconstrained).
void validate_advantages(const Necklace& neck, const AdvantageSpec& advantages);

// Fills every unconstrained color with r_j != 0 with thieves 0..r_j-1.
AdvantageSpec complete_advantages(const Necklace& neck, const AdvantageSpec& advantages);

struct DiscreteSplitting {
    std::vector<int> owner;  // bead -> thief

    // Adjacent beads with different owners.
    int cuts() const;
};

using Violations = std::vector<std::string>;

// Clauses: "length", "owner range", "fairness color j", "advantage color j",
// "cut bound" (colors 1-based in the text).
Violations verify_discrete(const Necklace& neck, const AdvantageSpec& advantages, const DiscreteSplitting& split);

inline constexpr std::uint64_t default_discrete_budget = 100'000'000;

// Brute force over at most max_cuts cut positions and all owner sequences
// with distinct neighbours; fewest cuts first, then cut sets and owners
// lexicographically. Throws BudgetExceeded when the state count exceeds budget.
std::optional<DiscreteSplitting> search_discrete(const Necklace& neck, const AdvantageSpec& advantages, int max_cuts,
                                                 std::uint64_t budget = default_discrete_budget);

// Cuts inside (0, n), strictly increasing; owners[i] takes the segment
// between cuts i-1 and i. Cut positions are measured in beads, so bead k
// occupies [k, k+1].
struct ContinuousSplitting {
    std::vector<Rational> cuts;
    std::vector<int> owners;

    bool operator==(const ContinuousSplitting&) const = default;
};

// Amount of every bead received by every thief: allocation[t][k].
using Allocation = std::vector<std::vector<Rational>>;

// Throws PreconditionError if cuts are out of order or out of range, owners
// has the wrong length, or an owner is out of range.
Allocation allocation(const ContinuousSplitting& cont, const Necklace& neck);

// Clauses: "shape", "fairness color j", "cut bound".
Violations verify_continuous(const ContinuousSplitting& cont, const Necklace& neck);

// Merges equal neighbouring owners and drops zero-length segments.
ContinuousSplitting canonicalize(const ContinuousSplitting& cont);

inline constexpr std::uint64_t default_pattern_budget = 1'000'000;

struct ContinuousSearchStats {
    std::uint64_t patterns = 0;
    std::uint64_t placements = 0;
};

// Exact continuous fair splitting with at most (q-1)m cuts. Owner patterns
// are enumerated by length, then lexicographically (thieves appear in first-use
// order); cut placements by bead, lexicographically; each placement is a
// transportation problem solved by integer max-flow in units of 1/q.
// Throws BudgetExceeded after `budget` owner patterns.
ContinuousSplitting search_continuous(const Necklace& neck, std::uint64_t budget = default_pattern_budget,
                                      ContinuousSearchStats* stats = nullptr);

struct FlowEdge {
    int thief;
    int bead;
    Rational amount;
};

// Bipartite thief/bead graph of one color over its split beads.
struct ColorFlowGraph {
    int color = 0;
    int q = 2;
    int remainder = 0;
    std::vector<int> split_beads;  // ascending
    std::vector<FlowEdge> edges;   // sorted by (bead, thief)
    std::vector<std::int64_t> alpha;  // per thief

    // Edges incident to bead / thief.
    std::vector<int> bead_edges(int bead) const;
    std::vector<int> thief_edges(int thief) const;
};

// Throws InvariantError if alpha is not a nonnegative integer or a bead
// total is not 1.
ColorFlowGraph build_flow_graph(const ContinuousSplitting& cont, const Necklace& neck, int color);
ColorFlowGraph build_flow_graph(const Allocation& alloc, const Necklace& neck, int color);

// Every equality of the per-color flow system, checked exactly; returns
// the violated ones ("edge total", "bead k", "thief t", "edge range",
// "alpha t", "degree").
Violations check_flow(const ColorFlowGraph& g);

bool is_forest(const ColorFlowGraph& g);

// Pushes flow around cycles of every color's graph until each is a forest,
// then rebuilds the cuts. Fairness is preserved; cut count never grows.
ContinuousSplitting cancel_cycles(const ContinuousSplitting& cont, const Necklace& neck);

}  // namespace fairsplit
