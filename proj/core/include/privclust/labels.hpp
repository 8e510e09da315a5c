#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace privclust {

using Labels = std::vector<std::size_t>;

// Relabels ids in first-seen order, so [4,4,1,4,7] becomes [0,0,1,0,2].
// Two labelings describe the same partition iff their canonical forms match.
Labels canonicalize(std::span<const std::size_t> labels);

// Number of distinct ids.
std::size_t count_clusters(std::span<const std::size_t> labels);

bool same_partition(std::span<const std::size_t> a, std::span<const std::size_t> b);

}  // namespace privclust
