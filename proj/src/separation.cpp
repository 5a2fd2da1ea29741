#include "symwsc/separation.hpp"

#include <algorithm>

namespace symwsc {

SeparationResult is_weakly_separated(const KSubset& S, const KSubset& T) {
    if (S.n != T.n)
        throw InputError("weak separation requires a common ambient: n=" + std::to_string(S.n) +
                         " vs n=" + std::to_string(T.n));
    if (S.k() != T.k())
        throw InputError("weak separation requires equal subset sizes: k=" +
                         std::to_string(S.k()) + " vs k=" + std::to_string(T.k()));

    // Merge S\T and T\S in increasing order and count maximal same-side runs.
    // A crossing quadruple exists (in either role) iff there are >= 4 runs;
    // the first element of each of the first four runs is then a witness.
    std::vector<std::pair<int, bool>> diff; // (element, belongs to S\T)
    for (int e : S.elems)
        if (!T.contains(e)) diff.emplace_back(e, true);
    for (int e : T.elems)
        if (!S.contains(e)) diff.emplace_back(e, false);
    std::sort(diff.begin(), diff.end());

    std::vector<int> run_starts;
    for (size_t i = 0; i < diff.size(); ++i)
        if (i == 0 || diff[i].second != diff[i - 1].second) run_starts.push_back(diff[i].first);

    SeparationResult res;
    if (run_starts.size() >= 4) {
        res.separated = false;
        res.witness = {run_starts[0], run_starts[1], run_starts[2], run_starts[3]};
    }
    return res;
}

CollectionCheck is_ws_collection(const Collection& D) {
    CollectionCheck check;
    for (size_t i = 0; i < D.members.size(); ++i)
        for (size_t j = i + 1; j < D.members.size(); ++j)
            if (!is_weakly_separated(D.members[i], D.members[j]).separated) {
                check.separated = false;
                check.failing_pairs.emplace_back(D.members[i], D.members[j]);
            }
    return check;
}

SymmetryCheck is_rho_symmetric(const Collection& D, int ell) {
    SymmetryCheck check;
    for (const KSubset& I : D.members)
        if (!D.contains(cyclic_shift_subset(I, ell))) {
            check.symmetric = false;
            check.violators.push_back(I);
        }
    return check;
}

MaximalityReport check_maximal(const Collection& D) {
    CollectionCheck ws = is_ws_collection(D);
    if (!ws.separated)
        throw ValidationError("maximality test on a non-separated collection; first failing pair " +
                              ws.failing_pairs.front().first.to_string() + ", " +
                              ws.failing_pairs.front().second.to_string());
    MaximalityReport rep;
    rep.size = D.size();
    rep.expected = D.k * (D.n - D.k) + 1;
    rep.maximal = rep.size == rep.expected;
    rep.has_all_intervals = true;
    for (int start = 1; start <= D.n; ++start)
        if (!D.contains(cyclic_interval(D.n, D.k, start))) {
            rep.has_all_intervals = false;
            break;
        }
    return rep;
}

} // namespace symwsc
