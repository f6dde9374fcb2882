#include "fairsplit/partition.hpp"

#include <algorithm>
#include <string>

#include "fairsplit/errors.hpp"

namespace fairsplit {

ColorPartition::ColorPartition(std::vector<int> color_of) : color_of_(std::move(color_of)) {
    if (color_of_.empty()) throw PreconditionError("partition: no vertices");
    int m = 0;
    for (int c : color_of_) {
        if (c < 0) throw PreconditionError("partition: negative color " + std::to_string(c));
        m = std::max(m, c + 1);
    }
    classes_.resize(m);
    masks_.assign(m, 0);
    for (int v = 0; v < size(); ++v) {
        classes_[color_of_[v]].push_back(v);
        if (v < 64) masks_[color_of_[v]] |= std::uint64_t{1} << v;
    }
    for (int j = 0; j < m; ++j)
        if (classes_[j].empty())
            throw PreconditionError("partition: color " + std::to_string(j + 1) + " has no vertex");
}

namespace {

void grow(std::vector<int>& rgs, int pos, int used, int max_colors,
          const std::function<void(const std::vector<int>&)>& f) {
    if (pos == static_cast<int>(rgs.size())) {
        f(rgs);
        return;
    }
    int limit = std::min(used + 1, max_colors);
    for (int c = 0; c < limit; ++c) {
        rgs[pos] = c;
        grow(rgs, pos + 1, std::max(used, c + 1), max_colors, f);
    }
}

}  // namespace

void for_each_set_partition(int n, int max_colors,
                            const std::function<void(const std::vector<int>&)>& f) {
    if (n <= 0 || max_colors <= 0) return;
    std::vector<int> rgs(n, 0);
    grow(rgs, 1, 1, max_colors, f);
}

std::vector<std::vector<int>> set_partitions(int n, int max_colors) {
    std::vector<std::vector<int>> out;
    for_each_set_partition(n, max_colors, [&](const std::vector<int>& c) { out.push_back(c); });
    return out;
}

}  // namespace fairsplit
