#pragma once

#include <map>
#include <vector>

#include "fairsplit/errors.hpp"
#include "fairsplit/necklace.hpp"

namespace fairsplit {

// Split bead -> the thief that receives it whole.
using BeadAssignment = std::map<int, int>;

// r_j = 1: b-factor with b(t) = alpha_t (+1 for chosen), b(k) = 1.
// Throws PreconditionError unless r_j = 1, g is a forest and
// |B_j| = sum alpha + 1; InvariantError if no b-factor exists.
BeadAssignment round_color_r1(const ColorFlowGraph& g, int chosen);

// r_j = q-1: perfect matching of the q-1 split beads into the thieves other
// than the disadvantaged one.
BeadAssignment round_color_rq1(const ColorFlowGraph& g, int disadvantaged);

// r_j = 0: b-factor with b(t) = alpha_t, b(k) = 1.
BeadAssignment round_color_r0(const ColorFlowGraph& g);

// Raised when some color has a remainder outside {0, 1, q-1}.
struct RemainderError : PreconditionError {
    RemainderError(const std::string& what, std::vector<int> offending)
        : PreconditionError(what), colors(std::move(offending)) {}
    std::vector<int> colors;  // 0-based
};

struct SplitTrace {
    ContinuousSplitting continuous;
    ContinuousSplitting acyclic;
    std::vector<BeadAssignment> rounding;  // per color
    DiscreteSplitting split;
};

// Continuous search, cycle cancellation, per-color rounding, whole-bead
// reassembly. Colors with r_j != 0 without an advantage entry use thieves 0..r_j-1.
// Throws RemainderError, BudgetExceeded, InvariantError.
DiscreteSplitting split_with_advantages(const Necklace& neck, const AdvantageSpec& advantages);
SplitTrace split_with_advantages_traced(const Necklace& neck, const AdvantageSpec& advantages,
                                        std::uint64_t budget = default_pattern_budget);

// Same pipeline from a given continuous fair splitting.
SplitTrace split_with_advantages_from(const Necklace& neck, const AdvantageSpec& advantages,
                                      const ContinuousSplitting& continuous);

struct R2FailureReport {
    Necklace necklace;
    ContinuousSplitting continuous;
    std::vector<int> target;                 // thieves that should get an extra bead
    std::vector<std::vector<int>> outcomes;  // every whole-bead owner vector reachable
    bool achievable = false;
    std::vector<int> witness;                // an outcome meeting the target, if any
};

// Four thieves, two beads of one color; bead 0 is shared half/half by
// thieves 0 and 1, bead 1 by thieves 2 and 3. Enumerates every way of
// giving each bead wholly to one of its sharers.
R2FailureReport demonstrate_r2_failure(std::vector<int> target = {0, 1});

}  // namespace fairsplit
