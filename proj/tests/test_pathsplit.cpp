#include <doctest.h>

#include <random>

#include "fairsplit/errors.hpp"
#include "fairsplit/pathsplit.hpp"
#include "oracles.hpp"

using namespace fairsplit;

namespace {

bool has(const Violations& v, const std::string& clause) {
    return std::find(v.begin(), v.end(), clause) != v.end();
}

// Surviving vertices in path order alternate between the two sets.
bool alternates(const ColoredPath& path, const PairSplit& s) {
    std::vector<int> side(path.size(), 0);
    for (int v : s.s1) side[v] = 1;
    for (int v : s.s2) side[v] = 2;
    int prev = 0;
    for (int v = 0; v < path.size(); ++v) {
        if (side[v] == 0) continue;
        if (side[v] == prev) return false;
        prev = side[v];
    }
    return true;
}

}  // namespace

TEST_CASE("pair split examples") {
    ColoredPath p({0, 0, 1, 1});
    PairSplit s = solve_pair_split(p);
    // first removal vector in lexicographic order that works, phase +
    CHECK(s.removed == std::vector<int>{0, 2});
    CHECK(s.s1 == std::vector<int>{1});
    CHECK(s.s2 == std::vector<int>{3});
    CHECK(verify_pair_split(p, s).empty());

    PairSplit two = solve_pair_split(ColoredPath({0, 0}));
    CHECK(two.removed == std::vector<int>{0});
    CHECK(two.s1.size() + two.s2.size() == 1);

    ColoredPath three({0, 1, 2, 0, 1, 2});
    PairSplit t = solve_pair_split(three);
    CHECK(verify_pair_split(three, t).empty());
    CHECK(t.s1.size() + t.s2.size() == 3);

    PairSplit single = solve_pair_split(ColoredPath({0}));
    CHECK(single.removed == std::vector<int>{0});
    CHECK(single.s1.empty());
    CHECK(single.s2.empty());
}

TEST_CASE("pair split verifier flags each broken clause") {
    ColoredPath p({0, 0, 1, 1});
    PairSplit good{{0, 2}, {1}, {3}};
    REQUIRE(verify_pair_split(p, good).empty());

    PairSplit adjacent{{0, 3}, {1, 2}, {}};
    CHECK(has(verify_pair_split(p, adjacent), "independence"));

    PairSplit two_removed{{0, 2}, {}, {3}};
    CHECK(has(verify_pair_split(p, two_removed), "coverage"));

    PairSplit overlap{{0, 2}, {1, 3}, {3}};
    CHECK(has(verify_pair_split(p, overlap), "disjointness"));

    PairSplit out_of_range{{0, 2}, {1}, {7}};
    CHECK(has(verify_pair_split(p, out_of_range), "range"));

    ColoredPath six({0, 0, 0, 0, 0, 0});
    PairSplit lopsided{{5}, {0, 2, 4}, {}};
    Violations v = verify_pair_split(six, lopsided);
    CHECK(has(v, "coverage"));
    PairSplit not_alternating{{1}, {0, 2, 4}, {3, 5}};
    CHECK(verify_pair_split(six, not_alternating).empty());

    ColoredPath five({0, 0, 0, 0, 0, 1, 1});
    PairSplit heavy{{1, 6}, {0, 2, 4}, {3, 5}};
    CHECK(has(verify_pair_split(five, heavy), "upper-bound"));
    PairSplit sizes{{1, 5}, {0, 2, 4, 6}, {3}};
    Violations sv = verify_pair_split(five, sizes);
    CHECK(has(sv, "balance"));
    CHECK(has(sv, "lower-bound"));
}

TEST_CASE("pair split succeeds, verifies and alternates on every partition with n up to 8") {
    for (int n = 1; n <= 8; ++n)
        for_each_set_partition(n, 3, [&](const std::vector<int>& colors) {
            ColoredPath p(colors);
            PairSplit s = solve_pair_split(p);
            REQUIRE(verify_pair_split(p, s).empty());
            REQUIRE(alternates(p, s));
            REQUIRE(oracle::pair_split_exists(colors));
        });
}

TEST_CASE("parallel and serial pair split return the same split") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 10 + trial % 21;
        int m = 1 + trial % 6;
        ColoredPath p(oracle::random_coloring(rng, n, m));
        PairSplit a = solve_pair_split(p);
        PairSplit b = serial::solve_pair_split(p);
        REQUIRE(a.removed == b.removed);
        REQUIRE(a.s1 == b.s1);
        REQUIRE(a.s2 == b.s2);
    }
}

TEST_CASE("cycle split") {
    ColoredPath even({0, 0, 1, 1});
    CycleSplit c = solve_cycle_split(even);
    CHECK(verify_cycle_split(even, c).empty());
    CHECK(c.induced_edges[0] == 0);
    CHECK(c.induced_edges[1] == 0);

    ColoredPath odd({0, 0, 0, 1, 1});
    CycleSplit d = solve_cycle_split(odd);
    CHECK(verify_cycle_split(odd, d).empty());
    CHECK(d.induced_edges[0] + d.induced_edges[1] <= 1);

    CHECK_THROWS_AS(solve_cycle_split(ColoredPath({0, 1})), PreconditionError);

    for (int n = 3; n <= 8; ++n)
        for_each_set_partition(n, 3, [&](const std::vector<int>& colors) {
            ColoredPath p(colors);
            CycleSplit s = solve_cycle_split(p);
            REQUIRE(verify_cycle_split(p, s).empty());
            const int lo = (n - p.colors()) / 2, hi = (n - p.colors() + 1) / 2;
            REQUIRE(s.induced_edges[s.independent_side] == 0);
            REQUIRE(s.induced_edges[1 - s.independent_side] <= hi - lo);
        });
}

TEST_CASE("q-stable brute force") {
    ColoredPath p({0, 0, 0, 1, 1});
    auto one = solve_qstable_bruteforce(p, 1);
    REQUIRE(one.has_value());
    CHECK(one->classes.size() == 1);
    CHECK(one->classes[0].size() == 5);

    for (int n = 1; n <= 8; ++n)
        for_each_set_partition(n, 3, [&](const std::vector<int>& colors) {
            ColoredPath path(colors);
            auto s = solve_qstable_bruteforce(path, 2);
            REQUIRE(s.has_value());
            REQUIRE(verify_qstable_split(path, 2, *s).empty());
        });

    for (int n = 2; n <= 9; ++n)
        for_each_set_partition(n, 2, [&](const std::vector<int>& colors) {
            ColoredPath path(colors);
            for (int j = 0; j < path.colors(); ++j)
                if (path.class_size(j) < 2) return;
            for (bool upper : {false, true}) {
                auto s = solve_qstable_bruteforce(path, 3, {upper});
                REQUIRE(s.has_value() == oracle::stable_split_exists(colors, 3, upper));
                if (s) REQUIRE(verify_qstable_split(path, 3, *s, upper).empty());
            }
        });

    CHECK_THROWS_AS(solve_qstable_bruteforce(ColoredPath(std::vector<int>(30, 0)), 3), BudgetExceeded);
    CHECK_THROWS_AS(solve_qstable_bruteforce(ColoredPath({0, 1, 1}), 3), PreconditionError);
}

TEST_CASE("seven vertices of one color cannot give every class two at q = 3") {
    ColoredPath p(std::vector<int>(7, 0));
    int best = -1;
    for_each_stable_cover(p, 3, [&](const StableSplit& s) {
        int low = 100;
        for (const auto& c : s.classes) low = std::min(low, static_cast<int>(c.size()));
        best = std::max(best, low);
        return true;
    });
    CHECK(best == 1);
    auto s = solve_qstable_bruteforce(p, 3);
    REQUIRE(s.has_value());
    CHECK(verify_qstable_split(p, 3, *s).empty());
}

TEST_CASE("q-stable verifier flags each broken clause") {
    ColoredPath p(std::vector<int>(7, 0));
    StableSplit good{3, {{5, 6}}, {{0, 3}, {1, 4}, {2}}};
    REQUIRE(verify_qstable_split(p, 3, good).empty());

    StableSplit close{3, {{5, 6}}, {{0, 2}, {1, 4}, {3}}};
    CHECK(has(verify_qstable_split(p, 3, close), "q-stability"));

    ColoredPath eight(std::vector<int>(8, 0));
    StableSplit uneven{3, {{6, 7}}, {{0, 3}, {1, 4}, {2, 5}}};
    REQUIRE(verify_qstable_split(eight, 3, uneven).empty());
    StableSplit skewed{2, {{7}}, {{0, 2, 4, 6}, {1, 3}}};
    Violations v = verify_qstable_split(eight, 2, skewed);
    CHECK(has(v, "coverage"));
    StableSplit sizes{2, {{7}}, {{0, 2, 4, 6}, {1, 5}}};
    CHECK(has(verify_qstable_split(eight, 2, sizes), "coverage"));

    ColoredPath ten(std::vector<int>(10, 0));
    StableSplit tilted{2, {{9}}, {{0, 2, 4, 6, 8}, {1, 3, 7}}};
    CHECK(has(verify_qstable_split(ten, 2, tilted), "coverage"));
    StableSplit bal{2, {{9}}, {{0, 2, 4, 6, 8}, {1, 3, 5, 7}}};
    CHECK(verify_qstable_split(ten, 2, bal).empty());
    CHECK(has(verify_qstable_split(ten, 2, bal, true), "upper-bound") == false);

    ColoredPath six(std::vector<int>(6, 0));
    StableSplit lean{2, {{5}}, {{0, 2, 4}, {1, 3}}};
    CHECK(verify_qstable_split(six, 2, lean).empty());
    CHECK(has(verify_qstable_split(six, 2, lean, true), "upper-bound") == false);
    StableSplit nine{3, {{7, 8}}, {{0, 3, 6}, {1, 4}, {2, 5}}};
    CHECK(verify_qstable_split(ColoredPath(std::vector<int>(9, 0)), 3, nine).empty());
    StableSplit too_many{3, {{5, 8}}, {{0, 3, 6}, {1, 4, 7}, {2}}};
    Violations tm = verify_qstable_split(ColoredPath(std::vector<int>(9, 0)), 3, too_many);
    CHECK(has(tm, "balance"));
}

TEST_CASE("composition of two pair splits") {
    std::vector<int> colors(16, 0);
    for (int v = 8; v < 16; ++v) colors[v] = 1;
    ColoredPath p(colors);
    StableSolver pair = [](const ColoredPath& path, int q) { return solve_stable(path, q); };
    StableSplit s = compose_splits(p, 2, 2, pair);
    CHECK(s.q == 4);
    CHECK(verify_qstable_split(p, 4, s).empty());
    for (const auto& r : s.removed) CHECK(r.size() == 3);
    for (const auto& c : s.classes) {
        int first = 0, second = 0;
        for (int v : c) (v < 8 ? first : second)++;
        CHECK(first >= 1);
        CHECK(second >= 1);
    }

    StableSplit id = compose_splits(p, 1, 1, pair);
    CHECK(id.classes.size() == 1);
    CHECK(id.classes[0].size() == 16);

    StableSplit four = solve_stable(p, 4, {true});
    CHECK(verify_qstable_split(p, 4, four, true).empty());
}

TEST_CASE("composition passes with the upper bound on paths with n up to 10") {
    for (int n = 3; n <= 10; ++n)
        for_each_set_partition(n, 2, [&](const std::vector<int>& colors) {
            ColoredPath p(colors);
            for (int j = 0; j < p.colors(); ++j)
                if (p.class_size(j) < 3) return;
            StableSplit s = solve_stable(p, 4);
            REQUIRE(verify_qstable_split(p, 4, s, true).empty());
        });
}

TEST_CASE("floor and ceiling division") {
    CHECK(floor_div(7, 3) == 2);
    CHECK(floor_div(-7, 3) == -3);
    CHECK(ceil_div(7, 3) == 3);
    CHECK(ceil_div(-7, 3) == -2);
    CHECK(floor_div(-6, 3) == -2);
    CHECK(ceil_div(0, 5) == 0);
    auto r = floor_ceil_identities(7, 3, 2);
    CHECK(r.floor_identity);
    CHECK(r.ceil_identity);
    r = floor_ceil_identities(-7, 3, 2);
    CHECK(r.floor_identity);
    CHECK(r.ceil_identity);
    CHECK_THROWS_AS(floor_ceil_identities(1, 0, 2), PreconditionError);
    CHECK_THROWS_AS(floor_ceil_identities(1, 2, 0), PreconditionError);
    for (int a = -30; a <= 30; ++a)
        for (int b = 1; b <= 6; ++b) {
            double exact = static_cast<double>(a) / b;
            CHECK(floor_div(a, b) == static_cast<std::int64_t>(std::floor(exact)));
            CHECK(ceil_div(a, b) == static_cast<std::int64_t>(std::ceil(exact)));
        }
}

TEST_CASE("pair and stable splits convert both ways") {
    ColoredPath p({0, 1, 0, 1, 2});
    PairSplit s = solve_pair_split(p);
    StableSplit st = to_stable_split(s);
    CHECK(st.q == 2);
    CHECK(verify_qstable_split(p, 2, st).empty());
    PairSplit back = to_pair_split(st);
    CHECK(back.removed == s.removed);
    CHECK(back.s1 == s.s1);
    CHECK(back.s2 == s.s2);
}
