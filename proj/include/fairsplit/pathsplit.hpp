#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fairsplit/partition.hpp"

namespace fairsplit {

// Two disjoint independent sets of a path covering all vertices but one per color.
struct PairSplit {
    std::vector<int> removed;  // removed[j] = the vertex of color j left out
    std::vector<int> s1;       // sorted
    std::vector<int> s2;       // sorted
};

// q pairwise disjoint q-stable sets covering all vertices but q-1 per color.
struct StableSplit {
    int q = 1;
    std::vector<std::vector<int>> removed;  // per color, sorted
    std::vector<std::vector<int>> classes;  // S_1..S_q, each sorted
};

// Names of the violated clauses; empty means the candidate is valid.
using Violations = std::vector<std::string>;

// Removal enumeration with forced alternation: removal vectors in
// lexicographic order, phase + before phase -. Throws InvariantError if no
// split is found. Runs the OpenMP kernel; serial::solve_pair_split is the
// reference and returns the identical split.
PairSplit solve_pair_split(const ColoredPath& path);

// Clauses: "range", "disjointness", "coverage", "independence", "balance",
// "lower-bound", "upper-bound".
Violations verify_pair_split(const ColoredPath& path, const PairSplit& cand);

struct CycleSplit {
    PairSplit split;
    int induced_edges[2] = {0, 0};  // cycle edges inside s1 and s2
    int independent_side = 0;       // 0 for s1, 1 for s2
};

// Drops the edge {n-1, 0}, splits the path, and counts induced cycle edges.
// Throws PreconditionError for n < 3.
CycleSplit solve_cycle_split(const ColoredPath& cycle);

// Checks the cycle guarantees: one side independent in the cycle with size
// floor((n-m)/2), the other inducing at most ceil - floor edges.
Violations verify_cycle_split(const ColoredPath& cycle, const CycleSplit& cand);

inline constexpr std::uint64_t default_stable_budget = 100'000'000;

struct StableSearchOptions {
    bool enforce_upper = false;
    std::uint64_t budget = default_stable_budget;  // cap on (q+1)^n
    bool force = false;                            // ignore the budget
};

// Exhaustive search over {discard, 1..q}^n with exactly q-1 discards per
// color. Returns the first assignment, in lexicographic order, that is a
// valid StableSplit, or nullopt. Throws BudgetExceeded, PreconditionError.
std::optional<StableSplit> solve_qstable_bruteforce(const ColoredPath& path, int q,
                                                    const StableSearchOptions& options = {});

// Visits every covering assignment (q-1 discards per color, pairwise
// disjoint q-stable classes) with no fairness filtering. The visitor returns
// false to stop. Same budget rule as solve_qstable_bruteforce.
void for_each_stable_cover(const ColoredPath& path, int q,
                           const std::function<bool(const StableSplit&)>& visit,
                           const StableSearchOptions& options = {});

// Clauses: "range", "disjointness", "coverage", "q-stability", "balance",
// "lower-bound", "upper-bound" (only with enforce_upper).
Violations verify_qstable_split(const ColoredPath& path, int q, const StableSplit& cand,
                                bool enforce_upper = false);

using StableSolver = std::function<StableSplit(const ColoredPath&, int)>;

// Solves at q1 on the path, then at q2 on each induced subpath; returns the
// q1*q2 classes in (outer, inner) order. Subsolver exceptions propagate.
StableSplit compose_splits(const ColoredPath& path, int q1, int q2, const StableSolver& subsolver);

// q = 1 trivially, q = 2 through solve_pair_split, other powers of two by
// repeated composition, anything else by brute force.
StableSplit solve_stable(const ColoredPath& path, int q, const StableSearchOptions& options = {});

PairSplit to_pair_split(const StableSplit& split);
StableSplit to_stable_split(const PairSplit& split);

// Floor and ceiling division rounding toward -infinity / +infinity.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

struct FloorCeilCheck {
    bool floor_identity;
    bool ceil_identity;
};

// floor(floor(a/b)/c) == floor(a/(bc)) and the ceiling analogue.
// Throws PreconditionError unless b, c >= 1.
FloorCeilCheck floor_ceil_identities(std::int64_t a, std::int64_t b, std::int64_t c);

namespace serial {
PairSplit solve_pair_split(const ColoredPath& path);
}  // namespace serial

}  // namespace fairsplit
