#include "symwsc/generator.hpp"

#include "symwsc/separation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace symwsc {

OrbitOrder OrbitOrder::descending(int ell) {
    OrbitOrder o;
    o.reps.resize(ell);
    for (int i = 0; i < ell; ++i) o.reps[i] = ell - i;
    return o;
}

void validate_order(const OrbitOrder& order, int ell, int fold_g) {
    if (static_cast<int>(order.reps.size()) != ell)
        throw InputError("orbit order must list all " + std::to_string(ell) + " classes, got " +
                         std::to_string(order.reps.size()));
    std::vector<bool> seen(ell + 1, false);
    for (int a : order.reps) {
        if (a < 1 || a > ell || seen[a])
            throw InputError("orbit order is not a permutation of 1.." + std::to_string(ell));
        seen[a] = true;
    }
    if (fold_g < ell) {
        // Folding constraint: the classes 1..g must come last.
        for (int pos = 0; pos < ell - fold_g; ++pos)
            if (order.reps[pos] <= fold_g)
                throw InputError("orbit order violates the folding constraint: class " +
                                 std::to_string(order.reps[pos]) + " must be among the last " +
                                 std::to_string(fold_g) + " entries");
    }
}

int successor(const std::vector<int>& P, int x) {
    auto it = std::lower_bound(P.begin(), P.end(), x);
    if (it == P.end() || *it != x)
        throw InputError("successor: " + std::to_string(x) + " is not in the ground set");
    ++it;
    return it == P.end() ? P.front() : *it;
}

int predecessor(const std::vector<int>& P, int x) {
    auto it = std::lower_bound(P.begin(), P.end(), x);
    if (it == P.end() || *it != x)
        throw InputError("predecessor: " + std::to_string(x) + " is not in the ground set");
    return it == P.begin() ? P.back() : *(it - 1);
}

namespace {

std::vector<int> element_orbit(int a, int ell, int n) {
    std::vector<int> orbit;
    int x = a;
    do {
        orbit.push_back(x);
        x = reduce1(static_cast<long long>(x) + ell, n);
    } while (x != a);
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

void check_divisible(const Feasibility& params) {
    if (!params.divisible())
        throw InputError("stagewise construction requires n = d*ell (got n=" +
                         std::to_string(params.n) + ", d*ell=" +
                         std::to_string(params.d * params.ell) + ")");
    if (!params.feasible) throw InfeasibleError("parameters fail the mod-d congruence");
}

int last_stage(const Feasibility& params) {
    // Stages run to ell-r+1; when r = 0 that nominal stage has an empty
    // ground set and no representative, so the sweep is capped at ell.
    return std::min(params.ell - params.r + 1, params.ell);
}

} // namespace

GroundSets ground_sets(const Feasibility& params, const OrbitOrder& order, int s) {
    check_divisible(params);
    if (s < 1 || s > params.ell + 1)
        throw InputError("stage s=" + std::to_string(s) + " out of range");

    const int n = params.n;
    std::vector<bool> removed(n + 1, false);
    for (int i = 0; i < s - 1 && i < params.ell; ++i)
        for (int x : element_orbit(order.reps[i], params.ell, n)) removed[x] = true;

    GroundSets gs;
    for (int x = 1; x <= n; ++x)
        if (!removed[x]) gs.P.push_back(x);

    gs.P_h.assign(params.d, gs.P);
    if (s <= params.ell) {
        const int a_s = order.reps[s - 1];
        for (int h = 1; h <= params.d - 1; ++h) {
            std::set<int> cut;
            for (int j = h; j <= params.d - 1; ++j)
                cut.insert(reduce1(static_cast<long long>(a_s) + j * params.ell, n));
            std::vector<int>& Ph = gs.P_h[h - 1];
            Ph.erase(std::remove_if(Ph.begin(), Ph.end(),
                                    [&](int x) { return cut.count(x) > 0; }),
                     Ph.end());
        }
    }
    return gs;
}

std::vector<int> index_window(const Feasibility& params, const OrbitOrder& order, int s) {
    check_divisible(params);
    if (s > params.ell) return {};
    GroundSets gs = ground_sets(params, order, s);
    const int a_s = order.reps[s - 1];
    const int from = successor(gs.P, reduce1(static_cast<long long>(a_s) - params.ell, params.n));

    std::vector<int> window;
    int x = from;
    while (true) {
        window.push_back(x);
        if (x == a_s) break;
        x = successor(gs.P, x);
        if (static_cast<int>(window.size()) > static_cast<int>(gs.P.size()))
            throw ValidationError("index window failed to close");
    }
    return window;
}

std::optional<KSubset> interval_I(const Feasibility& params, const OrbitOrder& order, int s,
                                  int i, int h) {
    check_divisible(params);
    if (h < 1 || h > params.d) throw InputError("h must lie in 1..d");
    GroundSets gs = ground_sets(params, order, s);
    const std::vector<int>& Ph = gs.P_h[h - 1];
    if (!std::binary_search(Ph.begin(), Ph.end(), i)) return std::nullopt;

    std::vector<int> picked;
    picked.reserve(params.k);
    int x = i;
    for (int step = 0; step < params.k; ++step) {
        if (std::find(picked.begin(), picked.end(), x) != picked.end())
            return std::nullopt; // iterates collided: fewer than k distinct elements
        picked.push_back(x);
        x = successor(Ph, x);
    }
    return KSubset(std::move(picked), params.n);
}

Collection build_B_s(const Feasibility& params, const OrbitOrder& order, int s) {
    check_divisible(params);
    Collection B(params.n, params.k);
    if (s > params.ell) return B;

    std::vector<int> window = index_window(params, order, s);
    // Only starts within k-1 successor steps of a_s yield intervals meeting
    // the orbit of a_s; keep the trailing min(t, k) entries of the window.
    const int keep = std::min<int>(window.size(), params.k);
    for (int wi = static_cast<int>(window.size()) - keep; wi < static_cast<int>(window.size());
         ++wi)
        for (int h = 1; h <= params.d; ++h)
            if (auto I = interval_I(params, order, s, window[wi], h)) B.insert(*I);
    return B;
}

Collection build_L_s(const Feasibility& params, const OrbitOrder& order, int s) {
    Collection B = build_B_s(params, order, s);
    Collection L(params.n, params.k);
    for (const KSubset& I : B.members) L.merge(rho_orbit(I, params.ell));
    return L;
}

SizePrediction predicted_sizes(const Feasibility& params, int s) {
    check_divisible(params);
    if (s < 1 || s > params.ell + 1) throw InputError("stage out of range");
    const long long k = params.k;
    const long long d = params.d;
    const int boundary = params.ell - params.r; // last stage with free orbits

    SizePrediction p;
    if (s < boundary) {
        p.B = k;
        p.L = d * k;
    } else if (s == boundary) {
        p.B = (params.c == 1) ? k - params.r : k;
        p.L = d * *p.B;
    } else if (s == boundary + 1) {
        switch (params.c) {
            case -1: p.L = k + 1; break;
            case 0: p.L = 1; break;
            default: p.L = 0; break;
        }
    }
    return p;
}

GeneratorTrace generate_divisible_trace(const Feasibility& params, const OrbitOrder& order) {
    check_divisible(params);
    validate_order(order, params.ell, params.ell);

    GeneratorTrace trace;
    trace.params = params;
    trace.run_params = params;
    trace.order = order;
    trace.result = Collection(params.n, params.k);

    for (int s = 1; s <= last_stage(params); ++s) {
        StageTrace st;
        st.s = s;
        st.rep = order.reps[s - 1];
        GroundSets gs = ground_sets(params, order, s);
        st.P = gs.P;
        st.P_h = gs.P_h;
        st.window = index_window(params, order, s);
        st.B = build_B_s(params, order, s);
        st.L = build_L_s(params, order, s);
        st.predicted = predicted_sizes(params, s);
        trace.result.merge(st.L);
        trace.stages.push_back(std::move(st));
    }
    return trace;
}

Collection generate_divisible(const Feasibility& params, const OrbitOrder& order) {
    return generate_divisible_trace(params, order).result;
}

KSubset fold_map_apply(const KSubset& I, int ell) {
    const int n = I.n;
    const int g = std::gcd(n, ell);
    const int d = n / g;
    std::vector<int> image;
    image.reserve(I.elems.size());
    for (int e : I.elems) {
        const int a = (e - 1) % g + 1;
        const int x = (e - 1) / g;
        image.push_back(a + ell * x);
    }
    return KSubset(std::move(image), d * ell);
}

KSubset fold_map_invert(const KSubset& J, int n, int ell) {
    const int g = std::gcd(n, ell);
    std::vector<int> pre;
    pre.reserve(J.elems.size());
    for (int f : J.elems) {
        const int a = (f - 1) % ell + 1;
        const int x = (f - 1) / ell;
        if (a > g)
            throw InputError("fold inverse: element " + std::to_string(f) +
                             " lies outside the image classes 1.." + std::to_string(g));
        pre.push_back(a + g * x);
    }
    return KSubset(std::move(pre), n);
}

GeneratorTrace generate_trace(int k, int n, int ell, std::optional<OrbitOrder> order_opt) {
    Feasibility params = require_feasible(k, n, ell);

    if (params.divisible()) {
        OrbitOrder order = order_opt.value_or(OrbitOrder::descending(ell));
        validate_order(order, ell, ell);
        return generate_divisible_trace(params, order);
    }

    // Folding: run at n' = d*ell with the classes 1..g ordered last, drop the
    // first ell-g orbit stages, and pull the remainder back along F.
    const int n_prime = params.d * ell;
    OrbitOrder order = order_opt.value_or(OrbitOrder::descending(ell));
    validate_order(order, ell, params.g);

    Feasibility run = feasibility(k, n_prime, ell);
    GeneratorTrace trace = generate_divisible_trace(run, order);
    trace.params = params;
    trace.folded = true;

    FoldInfo fold;
    fold.n_prime = n_prime;
    fold.dropped_stages = ell - params.g;
    fold.C = trace.result;

    Collection D_prime(n_prime, k);
    for (const KSubset& I : fold.C.members) D_prime.insert(I);
    for (const StageTrace& st : trace.stages)
        if (st.s <= fold.dropped_stages)
            for (const KSubset& I : st.L.members) {
                auto it = std::lower_bound(D_prime.members.begin(), D_prime.members.end(), I);
                if (it != D_prime.members.end() && *it == I) D_prime.members.erase(it);
            }
    fold.D_prime = D_prime;

    Collection D(n, k);
    for (const KSubset& J : D_prime.members) D.insert(fold_map_invert(J, n, ell));
    trace.fold = std::move(fold);
    trace.result = std::move(D);
    return trace;
}

Collection generate(int k, int n, int ell, std::optional<OrbitOrder> order) {
    return generate_trace(k, n, ell, std::move(order)).result;
}

namespace {

// Append to `current` the first successor of a_s in P_s that is not already
// present (and not in the orbit of a_s when `skip_orbit` is set). Returns
// false when no candidate exists.
bool walk_append(std::vector<int>& current, const std::vector<int>& P, const std::set<int>& orbit,
                 int a_s, bool skip_orbit) {
    int x = successor(P, a_s);
    for (size_t guard = 0; guard < P.size(); ++guard) {
        const bool used = std::find(current.begin(), current.end(), x) != current.end();
        if (!used && (!skip_orbit || orbit.count(x) == 0)) {
            current.push_back(x);
            return true;
        }
        x = successor(P, x);
    }
    return false;
}

} // namespace

InformalTrace informal_generate(const Feasibility& params, const OrbitOrder& order) {
    check_divisible(params);
    validate_order(order, params.ell, params.ell);

    InformalTrace trace;
    trace.result = Collection(params.n, params.k);

    for (int s = 1; s <= params.ell; ++s) {
        GroundSets gs = ground_sets(params, order, s);
        Collection B(params.n, params.k);
        const int a_s = order.reps[s - 1];
        std::set<int> orbit;
        for (int x : element_orbit(a_s, params.ell, params.n)) orbit.insert(x);

        if (static_cast<int>(gs.P.size()) >= params.k) {
            // Walk once per interval of P_s through a_s; the start ranges over
            // the k-1 predecessors of a_s (and a_s itself).
            std::vector<int> starts;
            int x = a_s;
            for (int back = 0; back < std::min(params.k, static_cast<int>(gs.P.size())); ++back) {
                starts.push_back(x);
                x = predecessor(gs.P, x);
            }
            std::reverse(starts.begin(), starts.end());

            for (int start : starts) {
                InformalWalk walk;
                walk.s = s;
                walk.start = start;
                std::vector<int> current;
                int y = start;
                for (int step = 0; step < params.k; ++step) {
                    current.push_back(y);
                    y = successor(gs.P, y);
                }

                const int cap = 4 * params.n * params.d + 8;
                int guard = 0;
                while (true) {
                    walk.visited.emplace_back(current, params.n);
                    B.insert(walk.visited.back());
                    if (++guard > cap) throw ValidationError("informal walk failed to terminate");

                    auto a_pos = std::find(current.begin(), current.end(), a_s);
                    // Rightmost orbit element strictly right of a_s, if any.
                    int right_orbit = -1;
                    if (a_pos != current.end())
                        for (auto it = current.end() - 1; it != a_pos; --it)
                            if (orbit.count(*it)) {
                                right_orbit = static_cast<int>(it - current.begin());
                                break;
                            }
                    if (right_orbit >= 0) {
                        current.erase(current.begin() + right_orbit);
                        if (!walk_append(current, gs.P, orbit, a_s, true)) break;
                        continue;
                    }
                    if (!current.empty() && current.front() == a_s) break; // a_s reached the left
                    const int removed = current.front();
                    current.erase(current.begin());
                    if (!walk_append(current, gs.P, orbit, a_s, orbit.count(removed) > 0)) break;
                }
                trace.walks.push_back(std::move(walk));
            }
        }

        for (const KSubset& I : B.members) trace.result.merge(rho_orbit(I, params.ell));
        trace.B.push_back(std::move(B));
    }
    return trace;
}

} // namespace symwsc
