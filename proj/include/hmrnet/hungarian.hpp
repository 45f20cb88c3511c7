#pragma once

#include <cstddef>
#include <vector>

namespace hmrnet {

/// Maximum-weight assignment on a rows x cols weight table (rectangular
/// allowed). Returns, for each row, the assigned column or -1 when the row
/// is left unmatched because there are more rows than columns.
std::vector<long> max_weight_assignment(const std::vector<std::vector<double>>& weight);

}  // namespace hmrnet
