#include "fairsplit/pathsplit.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fairsplit/errors.hpp"

namespace fairsplit {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

FloorCeilCheck floor_ceil_identities(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (b < 1 || c < 1) throw PreconditionError("floor_ceil_identities: b and c must be positive");
    return {floor_div(floor_div(a, b), c) == floor_div(a, b * c),
            ceil_div(ceil_div(a, b), c) == ceil_div(a, b * c)};
}

// ---------------------------------------------------------------- pair split

namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t removal_count(const ColoredPath& path) {
    std::uint64_t total = 1;
    for (int j = 0; j < path.colors(); ++j) {
        auto size = static_cast<std::uint64_t>(path.class_size(j));
        if (total > saturated / size) return saturated;
        total *= size;
    }
    return total;
}

// Decodes a removal index (color 0 most significant) and tries both phases.
class PairSearch {
public:
    explicit PairSearch(const ColoredPath& path)
        : path_(path), removed_(path.colors()), side_(path.size()), counts_(2 * path.colors()) {}

    bool attempt(std::uint64_t index, PairSplit* out) {
        for (int j = path_.colors() - 1; j >= 0; --j) {
            auto size = static_cast<std::uint64_t>(path_.class_size(j));
            removed_[j] = path_.members(j)[index % size];
            index /= size;
        }
        for (int phase = 0; phase < 2; ++phase)
            if (try_phase(phase, out)) return true;
        return false;
    }

private:
    bool try_phase(int phase, PairSplit* out) {
        std::fill(counts_.begin(), counts_.end(), 0);
        int side = phase;
        for (int v = 0; v < path_.size(); ++v) {
            int color = path_.color_of(v);
            if (removed_[color] == v) {
                side_[v] = -1;
                continue;
            }
            side_[v] = side;
            if (2 * ++counts_[2 * color + side] > path_.class_size(color)) return false;
            side ^= 1;
        }
        if (out) {
            out->removed = removed_;
            out->s1.clear();
            out->s2.clear();
            for (int v = 0; v < path_.size(); ++v) {
                if (side_[v] == 0) out->s1.push_back(v);
                if (side_[v] == 1) out->s2.push_back(v);
            }
        }
        return true;
    }

    const ColoredPath& path_;
    std::vector<int> removed_;
    std::vector<int> side_;
    std::vector<int> counts_;
};

[[noreturn]] void no_pair_split() {
    throw InvariantError("solve_pair_split: exhausted every removal without a split");
}

}  // namespace

PairSplit serial::solve_pair_split(const ColoredPath& path) {
    PairSearch search(path);
    PairSplit result;
    const std::uint64_t total = removal_count(path);
    for (std::uint64_t index = 0; index < total; ++index)
        if (search.attempt(index, &result)) return result;
    no_pair_split();
}

PairSplit solve_pair_split(const ColoredPath& path) {
    const std::uint64_t total = removal_count(path);
    constexpr std::uint64_t block = 4096;
    if (total <= block) return serial::solve_pair_split(path);

    // Blocks are scanned in order; inside a block the smallest successful
    // index wins, so the answer matches the serial scan exactly.
    for (std::uint64_t start = 0; start < total; start += block) {
        const auto end = static_cast<std::int64_t>(std::min(total, start + block));
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel reduction(min : best)
        {
            PairSearch search(path);
#pragma omp for schedule(static)
            for (std::int64_t index = static_cast<std::int64_t>(start); index < end; ++index)
                if (index < best && search.attempt(static_cast<std::uint64_t>(index), nullptr))
                    best = std::min(best, index);
        }
        if (best != std::numeric_limits<std::int64_t>::max()) {
            PairSplit result;
            PairSearch(path).attempt(static_cast<std::uint64_t>(best), &result);
            return result;
        }
    }
    no_pair_split();
}

namespace {

// Marks membership; returns false if a vertex is out of range.
bool mark(std::vector<int>& owner_count, const std::vector<int>& vertices) {
    bool ok = true;
    for (int v : vertices) {
        if (v < 0 || v >= static_cast<int>(owner_count.size())) ok = false;
        else ++owner_count[v];
    }
    return ok;
}

void add(Violations& out, const std::string& clause) {
    if (std::find(out.begin(), out.end(), clause) == out.end()) out.push_back(clause);
}

}  // namespace

Violations verify_pair_split(const ColoredPath& path, const PairSplit& cand) {
    const int n = path.size(), m = path.colors();
    Violations out;
    std::vector<int> count(n, 0);
    if (static_cast<int>(cand.removed.size()) != m) add(out, "range");
    for (int j = 0; j < static_cast<int>(cand.removed.size()); ++j) {
        int v = cand.removed[j];
        if (v < 0 || v >= n || j >= m || path.color_of(v) != j) add(out, "range");
        else ++count[v];
    }
    if (!mark(count, cand.s1) || !mark(count, cand.s2)) add(out, "range");
    for (int v = 0; v < n; ++v) {
        if (count[v] > 1) add(out, "disjointness");
        if (count[v] == 0) add(out, "coverage");
    }
    for (const auto* s : {&cand.s1, &cand.s2}) {
        std::vector<int> sorted = *s;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] - sorted[i - 1] == 1) add(out, "independence");
    }
    auto diff = static_cast<long>(cand.s1.size()) - static_cast<long>(cand.s2.size());
    if (diff > 1 || diff < -1) add(out, "balance");

    for (const auto* s : {&cand.s1, &cand.s2}) {
        std::vector<int> per_color(m, 0);
        for (int v : *s)
            if (v >= 0 && v < n) ++per_color[path.color_of(v)];
        for (int j = 0; j < m; ++j) {
            if (2 * per_color[j] < path.class_size(j) - 2) add(out, "lower-bound");
            if (2 * per_color[j] > path.class_size(j)) add(out, "upper-bound");
        }
    }
    return out;
}

// ---------------------------------------------------------------- cycles

namespace {

int cycle_edges_inside(const std::vector<int>& set, int n) {
    std::vector<char> in(n, 0);
    for (int v : set) in[v] = 1;
    int edges = 0;
    for (int v = 0; v < n; ++v)
        if (in[v] && in[(v + 1) % n]) ++edges;
    return edges;
}

}  // namespace

CycleSplit solve_cycle_split(const ColoredPath& cycle) {
    if (cycle.size() < 3) throw PreconditionError("solve_cycle_split: a cycle needs n >= 3");
    CycleSplit result;
    result.split = solve_pair_split(cycle);
    result.induced_edges[0] = cycle_edges_inside(result.split.s1, cycle.size());
    result.induced_edges[1] = cycle_edges_inside(result.split.s2, cycle.size());
    const int lo = (cycle.size() - cycle.colors()) / 2;
    result.independent_side =
        result.induced_edges[0] == 0 && static_cast<int>(result.split.s1.size()) == lo ? 0 : 1;
    return result;
}

Violations verify_cycle_split(const ColoredPath& cycle, const CycleSplit& cand) {
    Violations out = verify_pair_split(cycle, cand.split);
    if (!out.empty()) return out;
    const int n = cycle.size();
    const int free = n - cycle.colors();
    const int lo = free / 2, slack = (free + 1) / 2 - free / 2;
    int e1 = cycle_edges_inside(cand.split.s1, n), e2 = cycle_edges_inside(cand.split.s2, n);
    bool first_ok = e1 == 0 && static_cast<int>(cand.split.s1.size()) == lo && e2 <= slack;
    bool second_ok = e2 == 0 && static_cast<int>(cand.split.s2.size()) == lo && e1 <= slack;
    if (!first_ok && !second_ok) out.push_back("cycle-edges");
    if (e1 != cand.induced_edges[0] || e2 != cand.induced_edges[1]) out.push_back("edge-report");
    return out;
}

// ---------------------------------------------------------------- q-stable

namespace {

void check_stable_preconditions(const ColoredPath& path, int q, const StableSearchOptions& options) {
    if (q < 1) throw PreconditionError("q-stable split: q must be positive");
    for (int j = 0; j < path.colors(); ++j)
        if (path.class_size(j) < q - 1)
            throw PreconditionError("q-stable split: color " + std::to_string(j + 1) +
                                    " has fewer than q-1 vertices");
    if (options.force) return;
    std::uint64_t states = 1;
    for (int i = 0; i < path.size(); ++i) {
        if (states > options.budget / static_cast<std::uint64_t>(q + 1))
            throw BudgetExceeded("q-stable search: (q+1)^n exceeds the budget of " +
                                 std::to_string(options.budget));
        states *= static_cast<std::uint64_t>(q + 1);
    }
}

class StableSearch {
public:
    StableSearch(const ColoredPath& path, int q, bool fair, bool enforce_upper,
                 const std::function<bool(const StableSplit&)>& visit)
        : path_(path), q_(q), fair_(fair), enforce_upper_(enforce_upper), visit_(visit),
          assign_(path.size(), -1), last_(q, std::numeric_limits<int>::min() / 2),
          discards_(path.colors(), 0), remaining_(path.colors(), 0), sizes_(q, 0),
          shares_(static_cast<std::size_t>(q) * path.colors(), 0) {
        for (int j = 0; j < path.colors(); ++j) remaining_[j] = path.class_size(j);
        int covered = path.size() - (q - 1) * path.colors();
        max_size_ = static_cast<int>(ceil_div(covered, q));
        min_size_ = static_cast<int>(floor_div(covered, q));
    }

    void run() { descend(0); }

private:
    bool descend(int v) {
        if (v == path_.size()) return leaf();
        const int color = path_.color_of(v);
        --remaining_[color];
        bool go_on = true;
        // discard
        if (discards_[color] < q_ - 1) {
            ++discards_[color];
            assign_[v] = -1;
            go_on = descend(v + 1);
            --discards_[color];
        }
        // a discard deficit that the rest of this color cannot fill is dead
        for (int c = 0; go_on && c < q_; ++c) {
            if (remaining_[color] < q_ - 1 - discards_[color]) break;
            if (v - last_[c] < q_) continue;
            int& share = shares_[static_cast<std::size_t>(c) * path_.colors() + color];
            if (fair_ && sizes_[c] + 1 > max_size_) continue;
            if (enforce_upper_ && q_ * (share + 1) > path_.class_size(color)) continue;
            int saved = last_[c];
            last_[c] = v;
            ++sizes_[c];
            ++share;
            assign_[v] = c;
            go_on = descend(v + 1);
            --share;
            --sizes_[c];
            last_[c] = saved;
        }
        ++remaining_[color];
        return go_on;
    }

    bool leaf() {
        for (int j = 0; j < path_.colors(); ++j)
            if (discards_[j] != q_ - 1) return true;
        if (fair_) {
            for (int c = 0; c < q_; ++c) {
                if (sizes_[c] < min_size_) return true;
                for (int j = 0; j < path_.colors(); ++j) {
                    int lower = static_cast<int>(floor_div(path_.class_size(j) + 1, q_)) - 1;
                    if (shares_[static_cast<std::size_t>(c) * path_.colors() + j] < lower) return true;
                }
            }
        }
        StableSplit split;
        split.q = q_;
        split.removed.assign(path_.colors(), {});
        split.classes.assign(q_, {});
        for (int v = 0; v < path_.size(); ++v) {
            if (assign_[v] < 0) split.removed[path_.color_of(v)].push_back(v);
            else split.classes[assign_[v]].push_back(v);
        }
        return visit_(split);
    }

    const ColoredPath& path_;
    int q_;
    bool fair_;
    bool enforce_upper_;
    const std::function<bool(const StableSplit&)>& visit_;
    std::vector<int> assign_;
    std::vector<int> last_;
    std::vector<int> discards_;
    std::vector<int> remaining_;
    std::vector<int> sizes_;
    std::vector<int> shares_;
    int max_size_ = 0;
    int min_size_ = 0;
};

}  // namespace

std::optional<StableSplit> solve_qstable_bruteforce(const ColoredPath& path, int q,
                                                    const StableSearchOptions& options) {
    check_stable_preconditions(path, q, options);
    std::optional<StableSplit> found;
    std::function<bool(const StableSplit&)> keep = [&](const StableSplit& s) {
        found = s;
        return false;
    };
    StableSearch(path, q, true, options.enforce_upper, keep).run();
    return found;
}

void for_each_stable_cover(const ColoredPath& path, int q,
                           const std::function<bool(const StableSplit&)>& visit,
                           const StableSearchOptions& options) {
    check_stable_preconditions(path, q, options);
    StableSearch(path, q, false, false, visit).run();
}

Violations verify_qstable_split(const ColoredPath& path, int q, const StableSplit& cand,
                                bool enforce_upper) {
    const int n = path.size(), m = path.colors();
    Violations out;
    if (cand.q != q || static_cast<int>(cand.classes.size()) != q ||
        static_cast<int>(cand.removed.size()) != m)
        add(out, "range");
    std::vector<int> count(n, 0);
    for (int j = 0; j < static_cast<int>(cand.removed.size()); ++j) {
        if (static_cast<int>(cand.removed[j].size()) != q - 1) add(out, "coverage");
        for (int v : cand.removed[j]) {
            if (v < 0 || v >= n || j >= m || path.color_of(v) != j) add(out, "range");
            else ++count[v];
        }
    }
    for (const auto& cls : cand.classes)
        if (!mark(count, cls)) add(out, "range");
    for (int v = 0; v < n; ++v) {
        if (count[v] > 1) add(out, "disjointness");
        if (count[v] == 0) add(out, "coverage");
    }
    std::size_t smallest = std::numeric_limits<std::size_t>::max(), largest = 0;
    for (const auto& cls : cand.classes) {
        std::vector<int> sorted = cls;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] - sorted[i - 1] < q) add(out, "q-stability");
        smallest = std::min(smallest, cls.size());
        largest = std::max(largest, cls.size());
        std::vector<int> per_color(m, 0);
        for (int v : cls)
            if (v >= 0 && v < n) ++per_color[path.color_of(v)];
        for (int j = 0; j < m; ++j) {
            if (per_color[j] < floor_div(path.class_size(j) + 1, q) - 1) add(out, "lower-bound");
            if (enforce_upper && q * per_color[j] > path.class_size(j)) add(out, "upper-bound");
        }
    }
    if (!cand.classes.empty() && largest > smallest + 1) add(out, "balance");
    return out;
}

PairSplit to_pair_split(const StableSplit& split) {
    if (split.q != 2 || split.classes.size() != 2) throw PreconditionError("to_pair_split: q must be 2");
    PairSplit p;
    for (const auto& r : split.removed) {
        if (r.size() != 1) throw PreconditionError("to_pair_split: one removal per color expected");
        p.removed.push_back(r.front());
    }
    p.s1 = split.classes[0];
    p.s2 = split.classes[1];
    return p;
}

StableSplit to_stable_split(const PairSplit& split) {
    StableSplit s;
    s.q = 2;
    for (int v : split.removed) s.removed.push_back({v});
    s.classes = {split.s1, split.s2};
    return s;
}

StableSplit compose_splits(const ColoredPath& path, int q1, int q2, const StableSolver& subsolver) {
    if (q1 < 1 || q2 < 1) throw PreconditionError("compose_splits: q1 and q2 must be positive");
    const int m = path.colors();
    StableSplit outer = subsolver(path, q1);
    if (static_cast<int>(outer.classes.size()) != q1 || static_cast<int>(outer.removed.size()) != m)
        throw InvariantError("compose_splits: subsolver returned a malformed split");

    StableSplit result;
    result.q = q1 * q2;
    result.removed = outer.removed;
    for (const auto& part : outer.classes) {
        if (part.empty()) {
            if (q2 != 1) throw PreconditionError("compose_splits: empty part cannot be split further");
            result.classes.emplace_back();
            continue;
        }
        // Induced subpath with colors renumbered in increasing original order.
        std::vector<int> present(m, -1), original;
        for (int v : part) present[path.color_of(v)] = 0;
        for (int j = 0; j < m; ++j)
            if (present[j] == 0) {
                present[j] = static_cast<int>(original.size());
                original.push_back(j);
            }
        if (q2 > 1 && static_cast<int>(original.size()) != m)
            throw PreconditionError("compose_splits: a part misses a color entirely");
        std::vector<int> sub_colors;
        for (int v : part) sub_colors.push_back(present[path.color_of(v)]);
        StableSplit inner = subsolver(ColoredPath(sub_colors), q2);
        if (static_cast<int>(inner.classes.size()) != q2)
            throw InvariantError("compose_splits: subsolver returned a malformed split");
        for (std::size_t j = 0; j < inner.removed.size(); ++j)
            for (int idx : inner.removed[j]) result.removed[original[j]].push_back(part[idx]);
        for (const auto& cls : inner.classes) {
            std::vector<int> mapped;
            for (int idx : cls) mapped.push_back(part[idx]);
            result.classes.push_back(std::move(mapped));
        }
    }
    for (auto& r : result.removed) std::sort(r.begin(), r.end());
    return result;
}

StableSplit solve_stable(const ColoredPath& path, int q, const StableSearchOptions& options) {
    if (q < 1) throw PreconditionError("solve_stable: q must be positive");
    if (q == 1) {
        StableSplit s;
        s.q = 1;
        s.removed.assign(path.colors(), {});
        s.classes.emplace_back();
        for (int v = 0; v < path.size(); ++v) s.classes[0].push_back(v);
        return s;
    }
    if (q == 2) return to_stable_split(solve_pair_split(path));
    if ((q & (q - 1)) == 0) {
        for (int j = 0; j < path.colors(); ++j)
            if (path.class_size(j) < q - 1)
                throw PreconditionError("solve_stable: color " + std::to_string(j + 1) +
                                        " has fewer than q-1 vertices");
        return compose_splits(path, 2, q / 2, [&](const ColoredPath& p, int k) {
            return solve_stable(p, k, options);
        });
    }
    auto found = solve_qstable_bruteforce(path, q, options);
    if (!found)
        throw InvariantError("solve_stable: no q-stable split exists for this instance (q = " +
                             std::to_string(q) + "); this would be a counterexample");
    return *found;
}

}  // namespace fairsplit
