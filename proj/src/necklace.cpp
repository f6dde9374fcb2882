#include "fairsplit/necklace.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fairsplit/errors.hpp"

namespace fairsplit {

Necklace::Necklace(std::vector<int> beads, int q) : beads_(std::move(beads)), q_(q) {
    if (q_ < 2) throw PreconditionError("necklace: q must be at least 2");
    if (beads_.empty()) throw PreconditionError("necklace: no beads");
    int m = 0;
    for (int c : beads_) {
        if (c < 0) throw PreconditionError("necklace: negative color");
        m = std::max(m, c + 1);
    }
    count_.assign(m, 0);
    for (int c : beads_) ++count_[c];
    for (int j = 0; j < m; ++j)
        if (count_[j] == 0) throw PreconditionError("necklace: color " + std::to_string(j + 1) + " missing");
}

std::vector<int> remainders(const Necklace& neck) {
    std::vector<int> r(neck.colors());
    for (int j = 0; j < neck.colors(); ++j) r[j] = neck.remainder(j);
    return r;
}

void validate_advantages(const Necklace& neck, const AdvantageSpec& advantages) {
    for (const auto& [color, thieves] : advantages.advantaged) {
        std::string tag = "advantages for color " + std::to_string(color + 1);
        if (color < 0 || color >= neck.colors()) throw PreconditionError(tag + ": no such color");
        int r = neck.remainder(color);
        if (r == 0) throw PreconditionError(tag + ": remainder is 0");
        if (static_cast<int>(thieves.size()) != r)
            throw PreconditionError(tag + ": expected " + std::to_string(r) + " thieves");
        std::set<int> seen;
        for (int t : thieves) {
            if (t < 0 || t >= neck.thieves()) throw PreconditionError(tag + ": thief out of range");
            if (!seen.insert(t).second) throw PreconditionError(tag + ": repeated thief");
        }
    }
}

AdvantageSpec complete_advantages(const Necklace& neck, const AdvantageSpec& advantages) {
    validate_advantages(neck, advantages);
    AdvantageSpec full = advantages;
    for (int j = 0; j < neck.colors(); ++j) {
        int r = neck.remainder(j);
        if (r == 0 || full.advantaged.count(j)) continue;
        for (int t = 0; t < r; ++t) full.advantaged[j].push_back(t);
    }
    for (auto& [color, thieves] : full.advantaged) std::sort(thieves.begin(), thieves.end());
    return full;
}

int DiscreteSplitting::cuts() const {
    int c = 0;
    for (std::size_t i = 1; i < owner.size(); ++i)
        if (owner[i] != owner[i - 1]) ++c;
    return c;
}

Violations verify_discrete(const Necklace& neck, const AdvantageSpec& advantages, const DiscreteSplitting& split) {
    Violations out;
    if (static_cast<int>(split.owner.size()) != neck.size()) {
        out.push_back("length");
        return out;
    }
    const int q = neck.thieves(), m = neck.colors();
    for (int t : split.owner)
        if (t < 0 || t >= q) {
            out.push_back("owner range");
            return out;
        }
    std::vector<std::vector<int>> held(q, std::vector<int>(m, 0));
    for (int k = 0; k < neck.size(); ++k) ++held[split.owner[k]][neck.color(k)];
    for (int j = 0; j < m; ++j) {
        bool fair = true;
        for (int t = 0; t < q; ++t)
            if (held[t][j] != neck.floor_share(j) && held[t][j] != neck.ceil_share(j)) fair = false;
        if (!fair) out.push_back("fairness color " + std::to_string(j + 1));
        auto it = advantages.advantaged.find(j);
        if (fair && it != advantages.advantaged.end() && neck.remainder(j) != 0) {
            for (int t = 0; t < q; ++t) {
                bool listed = std::find(it->second.begin(), it->second.end(), t) != it->second.end();
                if ((held[t][j] == neck.ceil_share(j)) != listed) {
                    out.push_back("advantage color " + std::to_string(j + 1));
                    break;
                }
            }
        }
    }
    if (split.cuts() > (q - 1) * m) out.push_back("cut bound");
    return out;
}

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

class DiscreteSearch {
public:
    DiscreteSearch(const Necklace& neck, const AdvantageSpec& advantages)
        : neck_(neck), advantages_(advantages), owner_(neck.size(), 0) {}

    std::optional<DiscreteSplitting> run(int max_cuts) {
        for (int k = 0; k <= std::min(max_cuts, neck_.size() - 1); ++k) {
            cuts_.assign(k, 0);
            if (choose_cut(0, 1)) return DiscreteSplitting{owner_};
        }
        return std::nullopt;
    }

private:
    bool choose_cut(int i, int from) {
        if (i == static_cast<int>(cuts_.size())) {
            segment_owner_.assign(cuts_.size() + 1, -1);
            return choose_owner(0);
        }
        for (int p = from; p < neck_.size(); ++p) {
            cuts_[i] = p;
            if (choose_cut(i + 1, p + 1)) return true;
        }
        return false;
    }

    bool choose_owner(int s) {
        if (s == static_cast<int>(segment_owner_.size())) {
            int seg = 0;
            for (int k = 0; k < neck_.size(); ++k) {
                if (seg < static_cast<int>(cuts_.size()) && k == cuts_[seg]) ++seg;
                owner_[k] = segment_owner_[seg];
            }
            return verify_discrete(neck_, advantages_, DiscreteSplitting{owner_}).empty();
        }
        for (int t = 0; t < neck_.thieves(); ++t) {
            if (s > 0 && segment_owner_[s - 1] == t) continue;
            segment_owner_[s] = t;
            if (choose_owner(s + 1)) return true;
        }
        return false;
    }

    const Necklace& neck_;
    const AdvantageSpec& advantages_;
    std::vector<int> cuts_;
    std::vector<int> segment_owner_;
    std::vector<int> owner_;
};

}  // namespace

std::optional<DiscreteSplitting> search_discrete(const Necklace& neck, const AdvantageSpec& advantages, int max_cuts,
                                                 std::uint64_t budget) {
    validate_advantages(neck, advantages);
    if (max_cuts < 0) throw PreconditionError("search_discrete: negative cut limit");
    std::uint64_t states = 0;
    const auto q = static_cast<std::uint64_t>(neck.thieves());
    for (int k = 0; k <= std::min(max_cuts, neck.size() - 1); ++k) {
        std::uint64_t owners = q;
        for (int i = 0; i < k; ++i) owners *= q - 1;
        std::uint64_t c = binomial(neck.size() - 1, k);
        if (c != 0 && owners > (budget - states) / c)
            throw BudgetExceeded("search_discrete: more than " + std::to_string(budget) + " states");
        states += c * owners;
    }
    return DiscreteSearch(neck, advantages).run(max_cuts);
}

}  // namespace fairsplit
