#pragma once

#include <vector>

namespace qpart {

/// Minimum-cost perfect matching on a square cost matrix (Jonker-Volgenant
/// style Hungarian, O(n^3)). Returns the column matched to each row.
std::vector<int> solve_assignment(const std::vector<std::vector<long long>>& cost);

}  // namespace qpart
