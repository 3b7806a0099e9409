#pragma once

#include <utility>
#include <vector>

namespace sqci {

// sparse integer column: (row, coefficient) pairs
using SparseColumn = std::vector<std::pair<int, long long>>;

// exact rank over Q of the matrix with the given columns
int exact_rank(const std::vector<SparseColumn>& columns);

// first betti number of a cell complex truncated at dimension 2
// d1: boundaries of 1-cells in terms of 0-cells, d2: boundaries of 2-cells in terms of 1-cells
int betti1(const std::vector<SparseColumn>& d1, const std::vector<SparseColumn>& d2);

}  // namespace sqci
