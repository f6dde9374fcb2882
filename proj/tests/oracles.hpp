#pragma once

// Brute-force reference implementations. Deliberately naive: they share no
// code with the library beyond the plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

// Entries in {-1, 0, +1}.
using Signs = std::vector<int>;

inline Signs decode(int n, std::uint64_t code) {
    Signs x(n);
    for (int i = 0; i < n; ++i) {
        int d = static_cast<int>(code % 3);
        code /= 3;
        x[i] = d == 0 ? 0 : (d == 1 ? 1 : -1);
    }
    return x;
}

// Longest alternating subsequence of the nonzero entries, over every subset.
inline int alt(const Signs& x) {
    std::vector<int> nz;
    for (int s : x)
        if (s != 0) nz.push_back(s);
    const int k = static_cast<int>(nz.size());
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        int prev = 0, len = 0;
        bool alternating = true;
        for (int i = 0; i < k; ++i) {
            if (!(mask >> i & 1)) continue;
            if (nz[i] == prev) alternating = false;
            prev = nz[i];
            ++len;
        }
        if (alternating) best = std::max(best, len);
    }
    return best;
}

// Colors j (0-based) with an exact tie at |V_j|/2 or a strict majority side.
inline std::vector<int> J(const Signs& x, const std::vector<int>& color_of, int m) {
    std::vector<int> plus(m, 0), minus(m, 0), size(m, 0);
    for (std::size_t v = 0; v < x.size(); ++v) {
        ++size[color_of[v]];
        if (x[v] > 0) ++plus[color_of[v]];
        if (x[v] < 0) ++minus[color_of[v]];
    }
    std::vector<int> out;
    for (int j = 0; j < m; ++j) {
        bool tie = plus[j] == minus[j] && 2 * plus[j] == size[j];
        bool majority = 2 * std::max(plus[j], minus[j]) > size[j];
        if (tie || majority) out.push_back(j);
    }
    return out;
}

inline int count_colors(const std::vector<int>& color_of) {
    return color_of.empty() ? 0 : *std::max_element(color_of.begin(), color_of.end()) + 1;
}

inline int t_value(const std::vector<int>& color_of) {
    const int n = static_cast<int>(color_of.size());
    const int m = count_colors(color_of);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    int best = 0;
    for (std::uint64_t c = 0; c < total; ++c) {
        Signs x = decode(n, c);
        if (J(x, color_of, m).empty()) best = std::max(best, alt(x));
    }
    return best;
}

// Does a pair of disjoint independent sets exist that satisfies every
// clause of the two-set split? Exhaustive over {removed, S1, S2}^n.
inline bool pair_split_exists(const std::vector<int>& color_of) {
    const int n = static_cast<int>(color_of.size());
    const int m = count_colors(color_of);
    std::vector<int> size(m, 0);
    for (int c : color_of) ++size[c];
    std::vector<int> a(n, 0);  // 0 removed, 1 -> S1, 2 -> S2
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) {
            std::vector<int> removed(m, 0), in1(m, 0), in2(m, 0);
            int s1 = 0, s2 = 0;
            for (int u = 0; u < n; ++u) {
                if (a[u] == 0) ++removed[color_of[u]];
                if (a[u] == 1) ++in1[color_of[u]], ++s1;
                if (a[u] == 2) ++in2[color_of[u]], ++s2;
            }
            if (std::abs(s1 - s2) > 1) return false;
            for (int j = 0; j < m; ++j) {
                if (removed[j] != 1) return false;
                if (2 * in1[j] > size[j] || 2 * in2[j] > size[j]) return false;
                if (2 * std::min(in1[j], in2[j]) < size[j] - 2) return false;
            }
            return true;
        }
        for (int s = 0; s < 3; ++s) {
            if (s != 0 && v > 0 && a[v - 1] == s) continue;
            a[v] = s;
            if (rec(v + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

// Every assignment of vertices to {discard, 0..q-1} with q-1 discards per
// color and pairwise q-stable classes, reported as per-color class counts
// and class sizes. visit returns false to stop.
struct Cover {
    std::vector<int> part;  // -1 discard
};

inline void for_each_cover(const std::vector<int>& color_of, int q, const std::function<bool(const Cover&)>& visit) {
    const int n = static_cast<int>(color_of.size());
    const int m = count_colors(color_of);
    Cover c{std::vector<int>(n, -1)};
    std::vector<int> discards(m, 0);
    std::vector<int> last(q, -1000000);
    bool stop = false;
    std::function<void(int)> rec = [&](int v) {
        if (stop) return;
        if (v == n) {
            for (int j = 0; j < m; ++j)
                if (discards[j] != q - 1) return;
            if (!visit(c)) stop = true;
            return;
        }
        if (discards[color_of[v]] < q - 1) {
            ++discards[color_of[v]];
            c.part[v] = -1;
            rec(v + 1);
            --discards[color_of[v]];
        }
        for (int i = 0; i < q; ++i) {
            if (v - last[i] < q) continue;
            int saved = last[i];
            last[i] = v;
            c.part[v] = i;
            rec(v + 1);
            last[i] = saved;
        }
    };
    rec(0);
}

// Is a q-stable split with the lower bound (and optionally the upper bound) possible?
inline bool stable_split_exists(const std::vector<int>& color_of, int q, bool enforce_upper) {
    const int m = count_colors(color_of);
    std::vector<int> size(m, 0);
    for (int c : color_of) ++size[c];
    bool found = false;
    for_each_cover(color_of, q, [&](const Cover& c) {
        std::vector<int> total(q, 0);
        std::vector<std::vector<int>> meet(q, std::vector<int>(m, 0));
        for (std::size_t v = 0; v < c.part.size(); ++v)
            if (c.part[v] >= 0) ++total[c.part[v]], ++meet[c.part[v]][color_of[v]];
        if (*std::max_element(total.begin(), total.end()) - *std::min_element(total.begin(), total.end()) > 1)
            return true;
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < m; ++j) {
                if (meet[i][j] < (size[j] + 1) / q - 1) return true;
                if (enforce_upper && q * meet[i][j] > size[j]) return true;
            }
        found = true;
        return false;
    });
    return found;
}

// Exact degree-constrained edge subset by DFS over the edges.
inline std::optional<std::vector<int>> b_factor(int left, int right, const std::vector<std::pair<int, int>>& edges,
                                                const std::vector<int>& bl, const std::vector<int>& br) {
    std::vector<int> need_l = bl, need_r = br;
    // remaining edges touching each vertex, from index e onward
    const int k = static_cast<int>(edges.size());
    std::vector<std::vector<int>> rest_l(k + 1, std::vector<int>(left, 0)), rest_r(k + 1, std::vector<int>(right, 0));
    for (int e = k - 1; e >= 0; --e) {
        rest_l[e] = rest_l[e + 1];
        rest_r[e] = rest_r[e + 1];
        ++rest_l[e][edges[e].first];
        ++rest_r[e][edges[e].second];
    }
    std::vector<int> chosen;
    std::function<bool(int)> rec = [&](int e) -> bool {
        for (int u = 0; u < left; ++u)
            if (need_l[u] < 0 || need_l[u] > rest_l[e][u]) return false;
        for (int w = 0; w < right; ++w)
            if (need_r[w] < 0 || need_r[w] > rest_r[e][w]) return false;
        if (e == k) return true;
        auto [u, w] = edges[e];
        if (need_l[u] > 0 && need_r[w] > 0) {
            --need_l[u], --need_r[w];
            chosen.push_back(e);
            if (rec(e + 1)) return true;
            chosen.pop_back();
            ++need_l[u], ++need_r[w];
        }
        return rec(e + 1);
    };
    if (rec(0)) return chosen;
    return std::nullopt;
}

// Every owner vector in [q]^n; returns the first one passing accept.
inline std::optional<std::vector<int>> find_owner(int n, int q, const std::function<bool(const std::vector<int>&)>& accept) {
    std::vector<int> owner(n, 0);
    while (true) {
        if (accept(owner)) return owner;
        int i = n - 1;
        while (i >= 0 && owner[i] == q - 1) owner[i--] = 0;
        if (i < 0) return std::nullopt;
        ++owner[i];
    }
}

inline int owner_changes(const std::vector<int>& owner) {
    int c = 0;
    for (std::size_t i = 1; i < owner.size(); ++i) c += owner[i] != owner[i - 1];
    return c;
}

// Fair with the given advantaged thieves (per color, for colors with r != 0)
// and at most max_cuts owner changes.
inline bool fair_with(const std::vector<int>& beads, int q, const std::map<int, std::vector<int>>& advantaged,
                      int max_cuts, const std::vector<int>& owner) {
    const int m = count_colors(beads);
    std::vector<int> a(m, 0);
    for (int c : beads) ++a[c];
    std::vector<std::vector<int>> held(q, std::vector<int>(m, 0));
    for (std::size_t k = 0; k < beads.size(); ++k) ++held[owner[k]][beads[k]];
    for (int j = 0; j < m; ++j) {
        for (int t = 0; t < q; ++t) {
            int want = a[j] / q;
            auto it = advantaged.find(j);
            if (it != advantaged.end() && std::count(it->second.begin(), it->second.end(), t)) ++want;
            if (it == advantaged.end() && a[j] % q != 0) {
                if (held[t][j] != a[j] / q && held[t][j] != a[j] / q + 1) return false;
                continue;
            }
            if (held[t][j] != want) return false;
        }
    }
    return owner_changes(owner) <= max_cuts;
}

// All r-subsets of [q], lexicographic.
inline std::vector<std::vector<int>> subsets(int q, int r) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
        if (__builtin_popcount(mask) != r) continue;
        std::vector<int> s;
        for (int t = 0; t < q; ++t)
            if (mask >> t & 1) s.push_back(t);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Uniform random coloring of n vertices using exactly m colors, relabeled
// in order of first appearance.
inline std::vector<int> random_coloring(std::mt19937_64& rng, int n, int m) {
    std::uniform_int_distribution<int> pick(0, m - 1);
    while (true) {
        std::vector<int> raw(n);
        for (int& c : raw) c = pick(rng);
        std::vector<int> label(m, -1), out(n);
        int next = 0;
        for (int v = 0; v < n; ++v) {
            if (label[raw[v]] < 0) label[raw[v]] = next++;
            out[v] = label[raw[v]];
        }
        if (next == m) return out;
    }
}

}  // namespace oracle
