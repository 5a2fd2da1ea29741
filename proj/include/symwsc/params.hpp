#pragma once

#include "symwsc/base.hpp"

namespace symwsc {

/// Parameter triple (k, n, ell) together with the derived quantities that
/// control the symmetric construction.
///
/// g = gcd(n, ell), d = n/g is the order of the shift x -> x + ell (mod n).
/// When k mod d lies in {0, 1, d-1} the decomposition k = d*r + c with
/// c in {-1, 0, 1} is populated and `feasible` is true.
struct Feasibility {
    int k = 0;
    int n = 0;
    int ell = 0;
    int g = 0;
    int d = 0;
    bool feasible = false;
    int r = 0; // valid only when feasible
    int c = 0; // valid only when feasible; one of -1, 0, 1

    /// True when ell divides n, i.e. no folding step is needed.
    bool divisible() const { return n == d * ell; }
};

/// Analyze (k, n, ell). Throws InputError when parameters are out of range
/// (requires 1 <= k <= n-1 and 1 <= ell <= n-1).
Feasibility feasibility(int k, int n, int ell);

/// As `feasibility` but throws InfeasibleError when the congruence fails.
Feasibility require_feasible(int k, int n, int ell);

} // namespace symwsc
