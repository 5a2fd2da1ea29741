#pragma once

#include "symwsc/subset.hpp"

#include <optional>
#include <vector>

namespace symwsc {

struct OracleOptions {
    std::optional<int> symmetric_ell; // restrict to rho^ell-closed collections
    int limit = 0;                    // stop after this many hits (0 = all)
    long long budget = 16;            // refuse full enumeration when k(n-k) exceeds this
};

/// Exhaustive backtracking enumeration of maximal weakly separated
/// collections of k-subsets of [n]. Seeds with the n forced cyclic
/// intervals and extends in lexicographic order, so the output sequence is
/// deterministic. In symmetric mode whole rho^ell-orbits are added at once.
std::vector<Collection> oracle_enumerate(int k, int n, const OracleOptions& opts = {});

} // namespace symwsc
