#include "symwsc/params.hpp"

#include <numeric>
#include <string>

namespace symwsc {

Feasibility feasibility(int k, int n, int ell) {
    if (n < 2) throw InputError("n must be at least 2, got " + std::to_string(n));
    if (k < 1 || k > n - 1)
        throw InputError("k must satisfy 1 <= k <= n-1, got k=" + std::to_string(k) +
                         " with n=" + std::to_string(n));
    if (ell < 1 || ell > n - 1)
        throw InputError("ell must satisfy 1 <= ell <= n-1, got ell=" + std::to_string(ell));

    Feasibility f;
    f.k = k;
    f.n = n;
    f.ell = ell;
    f.g = std::gcd(n, ell);
    f.d = n / f.g;

    // k = d*r + c with c in {-1, 0, 1}. For d = 2 and odd k both c = 1 and
    // c = -1 fit; prefer c = 1 (checked first) so that the stage bookkeeping
    // matches the worked example at (k, n, ell) = (3, 6, 3).
    const int m = k % f.d;
    if (m == 0) {
        f.feasible = true;
        f.c = 0;
        f.r = k / f.d;
    } else if (m == 1) {
        f.feasible = true;
        f.c = 1;
        f.r = (k - 1) / f.d;
    } else if (m == f.d - 1) {
        f.feasible = true;
        f.c = -1;
        f.r = (k + 1) / f.d;
    }
    return f;
}

Feasibility require_feasible(int k, int n, int ell) {
    Feasibility f = feasibility(k, n, ell);
    if (!f.feasible)
        throw InfeasibleError("no rho^ell-symmetric maximal collection exists: k=" +
                              std::to_string(k) + " is not congruent to -1, 0 or 1 mod d=" +
                              std::to_string(f.d));
    return f;
}

} // namespace symwsc
