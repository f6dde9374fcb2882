// Serial reference kernels against their OpenMP counterparts.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include <omp.h>

#include "fairsplit/pathsplit.hpp"
#include "fairsplit/signkit.hpp"

using namespace fairsplit;

namespace {

double seconds(const std::function<void()>& f, int reps) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const char* name, double serial, double parallel, bool same) {
    std::printf("%-34s %10.4f %10.4f %7.2fx %s\n", name, serial, parallel, serial / parallel, same ? "same" : "DIFFERENT");
}

std::vector<int> blocks(int n, int m) {
    std::vector<int> c(n);
    for (int v = 0; v < n; ++v) c[v] = v * m / n;
    return c;
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial s", "openmp s", "speedup");

    for (int n : {10, 12}) {
        ColorPartition p(blocks(n, 3));
        int a = 0, b = 0;
        double ts = seconds([&] { a = serial::compute_t(p); }, 1);
        double tp = seconds([&] { b = compute_t(p); }, 1);
        char name[64];
        std::snprintf(name, sizeof name, "compute_t n=%d m=3", n);
        row(name, ts, tp, a == b);
    }

    for (int n : {7, 8}) {
        ColorPartition p(blocks(n, 2));
        int t = compute_t(p);
        Labeling l = tabulate_lambda(p, t);
        TuckerReport a, b;
        double ts = seconds([&] { a = serial::tucker_verify(l, t + 2); }, 1);
        double tp = seconds([&] { b = tucker_verify(l, t + 2); }, 1);
        char name[64];
        std::snprintf(name, sizeof name, "tucker_verify n=%d m=2", n);
        row(name, ts, tp, a.complementary_pairs == b.complementary_pairs && a.ok() == b.ok());
    }

    std::mt19937_64 rng(3);
    for (int m : {6, 10}) {
        std::vector<ColoredPath> paths;
        for (int k = 0; k < 300; ++k) {
            std::vector<int> colors(40);
            for (int v = 0; v < 40; ++v) colors[v] = v < m ? v : static_cast<int>(rng() % m);
            paths.emplace_back(colors);
        }
        bool same = true;
        double ts = seconds([&] { for (const auto& p : paths) serial::solve_pair_split(p); }, 1);
        double tp = seconds([&] { for (const auto& p : paths) solve_pair_split(p); }, 1);
        for (const auto& p : paths) {
            PairSplit a = serial::solve_pair_split(p), b = solve_pair_split(p);
            same = same && a.removed == b.removed && a.s1 == b.s1 && a.s2 == b.s2;
        }
        char name[64];
        std::snprintf(name, sizeof name, "solve_pair_split 300 x n=40 m=%d", m);
        row(name, ts, tp, same);
    }
    return 0;
}
