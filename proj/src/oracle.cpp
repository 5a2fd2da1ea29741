#include "symwsc/oracle.hpp"

#include "symwsc/separation.hpp"

#include <algorithm>
#include <functional>

namespace symwsc {

namespace {

std::vector<KSubset> all_subsets(int n, int k) {
    std::vector<KSubset> out;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i + 1;
    while (true) {
        out.emplace_back(comb, n);
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Collection> oracle_enumerate(int k, int n, const OracleOptions& opts) {
    if (n < 2 || k < 1 || k > n - 1) throw InputError("oracle: parameters out of range");
    const long long area = static_cast<long long>(k) * (n - k);
    if (!opts.symmetric_ell && area > opts.budget)
        throw InputError("oracle: instance exceeds the enumeration budget k(n-k) <= " +
                         std::to_string(opts.budget));

    const std::vector<KSubset> univ = all_subsets(n, k);
    const int m = static_cast<int>(univ.size());
    const int target = k * (n - k) + 1;

    // Pairwise compatibility table.
    std::vector<std::vector<char>> compat(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            const char ok = (i == j) || is_weakly_separated(univ[i], univ[j]).separated;
            compat[i][j] = compat[j][i] = ok;
        }

    auto index_of = [&](const KSubset& s) {
        return static_cast<int>(std::lower_bound(univ.begin(), univ.end(), s) - univ.begin());
    };

    const Collection intervals = all_cyclic_intervals(n, k);
    std::vector<int> forced;
    for (const KSubset& s : intervals.members) forced.push_back(index_of(s));
    std::sort(forced.begin(), forced.end());
    for (int a : forced)
        for (int b : forced)
            if (!compat[a][b]) throw ValidationError("cyclic intervals are not pairwise separated");

    std::vector<Collection> results;
    auto emit = [&](const std::vector<int>& chosen) {
        std::vector<KSubset> xs;
        xs.reserve(chosen.size());
        for (int idx : chosen) xs.push_back(univ[idx]);
        results.emplace_back(n, k, std::move(xs));
        return opts.limit > 0 && static_cast<int>(results.size()) >= opts.limit;
    };

    if (!opts.symmetric_ell) {
        // Units are single subsets; extend in index order above the seed.
        std::vector<int> chosen = forced;
        std::vector<char> in_chosen(m, 0);
        for (int a : forced) in_chosen[a] = 1;

        std::function<bool(int)> rec = [&](int from) -> bool {
            if (static_cast<int>(chosen.size()) == target) return emit(chosen);
            for (int c = from; c < m; ++c) {
                if (in_chosen[c]) continue;
                bool ok = true;
                for (int x : chosen)
                    if (!compat[x][c]) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                chosen.push_back(c);
                in_chosen[c] = 1;
                const bool stop = rec(c + 1);
                chosen.pop_back();
                in_chosen[c] = 0;
                if (stop) return true;
            }
            return false;
        };
        rec(0);
        return results;
    }

    // Symmetric mode: branch on whole rho^ell-orbits, keyed by the index of
    // the lexicographically least member.
    const int ell = *opts.symmetric_ell;
    std::vector<int> orbit_id(m, -1);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < m; ++i) {
        if (orbit_id[i] >= 0) continue;
        Collection orb = rho_orbit(univ[i], ell);
        std::vector<int> ids;
        for (const KSubset& s : orb.members) ids.push_back(index_of(s));
        std::sort(ids.begin(), ids.end());
        if (ids.front() != i) continue; // canonical representative only
        const int oid = static_cast<int>(orbits.size());
        for (int idx : ids) orbit_id[idx] = oid;
        orbits.push_back(std::move(ids));
    }
    for (int i = 0; i < m; ++i)
        if (orbit_id[i] < 0) {
            Collection orb = rho_orbit(univ[i], ell);
            std::vector<int> ids;
            for (const KSubset& s : orb.members) ids.push_back(index_of(s));
            std::sort(ids.begin(), ids.end());
            orbit_id[i] = orbit_id[ids.front()];
        }

    const int norb = static_cast<int>(orbits.size());
    std::vector<char> orbit_internal_ok(norb, 1);
    for (int o = 0; o < norb; ++o)
        for (size_t a = 0; a < orbits[o].size() && orbit_internal_ok[o]; ++a)
            for (size_t b = a + 1; b < orbits[o].size(); ++b)
                if (!compat[orbits[o][a]][orbits[o][b]]) {
                    orbit_internal_ok[o] = 0;
                    break;
                }

    std::vector<char> used_orbit(norb, 0);
    std::vector<int> chosen;
    for (int a : forced)
        if (!used_orbit[orbit_id[a]]) {
            used_orbit[orbit_id[a]] = 1;
            if (!orbit_internal_ok[orbit_id[a]]) return {}; // cannot even seed
            for (int idx : orbits[orbit_id[a]]) chosen.push_back(idx);
        }
    std::sort(chosen.begin(), chosen.end());
    for (size_t a = 0; a < chosen.size(); ++a)
        for (size_t b = a + 1; b < chosen.size(); ++b)
            if (!compat[chosen[a]][chosen[b]]) return {};

    std::function<bool(int)> rec_orb = [&](int from) -> bool {
        if (static_cast<int>(chosen.size()) == target) return emit(chosen);
        if (static_cast<int>(chosen.size()) > target) return false;
        for (int o = from; o < norb; ++o) {
            if (used_orbit[o] || !orbit_internal_ok[o]) continue;
            if (static_cast<int>(chosen.size() + orbits[o].size()) > target) continue;
            bool ok = true;
            for (int cand : orbits[o]) {
                for (int x : chosen)
                    if (!compat[x][cand]) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (!ok) continue;
            used_orbit[o] = 1;
            const size_t before = chosen.size();
            for (int idx : orbits[o]) chosen.push_back(idx);
            const bool stop = rec_orb(o + 1);
            chosen.resize(before);
            used_orbit[o] = 0;
            if (stop) return true;
        }
        return false;
    };
    rec_orb(0);
    return results;
}

} // namespace symwsc
