#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fairsplit {

// Partition of the vertices 0..n-1 of a path into color classes 0..m-1.
// Vertices are in path order; edges {i, i+1} are implicit.
class ColorPartition {
public:
    // Colors are 0-based and must be contiguous; every class nonempty.
    explicit ColorPartition(std::vector<int> color_of);

    int size() const { return static_cast<int>(color_of_.size()); }
    int colors() const { return static_cast<int>(classes_.size()); }
    int color_of(int v) const { return color_of_[v]; }
    const std::vector<int>& color_vector() const { return color_of_; }
    const std::vector<int>& members(int color) const { return classes_[color]; }
    int class_size(int color) const { return static_cast<int>(classes_[color].size()); }

    // Bit i set iff vertex i has the given color. Only valid for n <= 64.
    std::uint64_t class_mask(int color) const { return masks_[color]; }

    bool operator==(const ColorPartition&) const = default;

private:
    std::vector<int> color_of_;
    std::vector<std::vector<int>> classes_;
    std::vector<std::uint64_t> masks_;
};

// A path whose vertices carry colors; the same object read as a cycle
// where the cycle commands ask for it.
using ColoredPath = ColorPartition;

// Calls f for every coloring of n vertices with at most max_colors colors
// in restricted-growth form (vertex 0 has color 0, each new color is the
// next unused index). Each set partition of [n] is visited exactly once.
void for_each_set_partition(int n, int max_colors,
                            const std::function<void(const std::vector<int>&)>& f);

// Materialized version of for_each_set_partition.
std::vector<std::vector<int>> set_partitions(int n, int max_colors);

}  // namespace fairsplit
