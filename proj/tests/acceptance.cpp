// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Criterion 1 drives the command line tool end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symwsc/json_io.hpp"
#include "symwsc/oracle.hpp"
#include "symwsc/pipeline.hpp"
#include "symwsc/separation.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>

using namespace symwsc;

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool pass, const std::string& what) {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << what
              << std::endl;
}

KSubset ks(std::vector<int> v, int n) { return KSubset(std::move(v), n); }

Collection coll(int n, int k, std::vector<std::vector<int>> vs) {
    std::vector<KSubset> xs;
    for (auto& v : vs) xs.push_back(ks(v, n));
    return Collection(n, k, std::move(xs));
}

const Collection golden = coll(6, 3,
                               {{1, 2, 3},
                                {2, 3, 4},
                                {3, 4, 5},
                                {4, 5, 6},
                                {1, 5, 6},
                                {1, 2, 6},
                                {1, 2, 5},
                                {2, 4, 5},
                                {1, 2, 4},
                                {1, 4, 5}});

std::vector<Feasibility> feasible_sweep(int max_n, bool divisible_only) {
    std::vector<Feasibility> out;
    for (int n = 2; n <= max_n; ++n)
        for (int ell = 1; ell < n; ++ell) {
            if (divisible_only && n % ell != 0) continue;
            for (int k = 1; k <= n / 2; ++k) {
                Feasibility f = feasibility(k, n, ell);
                if (f.feasible) out.push_back(f);
            }
        }
    return out;
}

std::string run_cli(const std::string& args, int& exit_code) {
#ifdef SYMWSC_CLI_PATH
    const std::string cmd = std::string(SYMWSC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
#else
    exit_code = -1;
    return {};
#endif
}

// Independent triangulation enumerator: backtracking over non-crossing
// diagonal sets of the convex m-gon, counting the complete triangulations.
long long count_triangulations(int m) {
    std::vector<std::pair<int, int>> diags;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 2; b <= m; ++b)
            if (!(a == 1 && b == m)) diags.emplace_back(a, b);

    auto crosses = [](std::pair<int, int> d1, std::pair<int, int> d2) {
        auto [a, b] = d1;
        auto [c, d] = d2;
        auto strictly_inside = [](int x, int lo, int hi) { return lo < x && x < hi; };
        return (strictly_inside(c, a, b) && !strictly_inside(d, a, b) && d != a && d != b) ||
               (strictly_inside(d, a, b) && !strictly_inside(c, a, b) && c != a && c != b);
    };

    const int target = m - 3; // diagonals in a full triangulation
    long long count = 0;
    std::vector<int> chosen;
    std::function<void(size_t)> rec = [&](size_t from) {
        if (static_cast<int>(chosen.size()) == target) {
            ++count;
            return;
        }
        for (size_t i = from; i < diags.size(); ++i) {
            bool ok = true;
            for (int c : chosen)
                if (crosses(diags[c], diags[i])) {
                    ok = false;
                    break;
                }
            if (ok) {
                chosen.push_back(static_cast<int>(i));
                rec(i + 1);
                chosen.pop_back();
            }
        }
    };
    rec(0);
    return count;
}

} // namespace

TEST_CASE("criterion 1: golden reproduction through the CLI") {
    Stopwatch sw;
    int exit_code = -1;
    std::string out = run_cli("generate -k 3 -n 6 -l 3 --order 3,2,1", exit_code);
    bool pass = exit_code == 0 && !out.empty();
    if (pass) {
        Collection D = collection_from_json(parse_payload(out));
        pass = D == golden;
    }
    pass = pass && sw.seconds() < 1.0;
    report(1, pass, "CLI generate -k 3 -n 6 -l 3 --order 3,2,1 returns the golden set");
    CHECK(pass);
}

TEST_CASE("criterion 2: size law over the sweep n <= 12") {
    Stopwatch sw;
    bool pass = true;
    int instances = 0;
    for (const Feasibility& f : feasible_sweep(12, false)) {
        Collection D = generate(f.k, f.n, f.ell);
        ++instances;
        MaximalityReport rep = check_maximal(D); // throws if not separated
        pass = pass && rep.maximal && rep.has_all_intervals;
        pass = pass && D.size() == f.k * (f.n - f.k) + 1;
        pass = pass && is_rho_symmetric(D, f.ell).symmetric;
    }
    const double t = sw.seconds();
    pass = pass && t < 60.0;
    report(2, pass,
           std::to_string(instances) + " feasible instances, size k(n-k)+1, separated, "
           "closed, all intervals, " + std::to_string(t) + "s");
    CHECK(pass);
}

TEST_CASE("criterion 3: stagewise counting laws") {
    bool pass = true;
    int checked = 0;
    for (const Feasibility& f : feasible_sweep(12, true)) {
        GeneratorTrace trace = generate_divisible_trace(f, OrbitOrder::descending(f.ell));
        for (const StageTrace& st : trace.stages) {
            if (st.predicted.B) {
                ++checked;
                pass = pass && st.B.size() == *st.predicted.B;
            }
            if (st.predicted.L) {
                ++checked;
                pass = pass && st.L.size() == *st.predicted.L;
            }
        }
        // three-way final-stage law: k+1 / 1 / 0 members in L_{ell-r+1}
        const int last = f.ell - f.r + 1;
        long long actual = 0;
        for (const StageTrace& st : trace.stages)
            if (st.s == last) actual = st.L.size();
        const long long want = f.c == -1 ? f.k + 1 : f.c == 0 ? 1 : 0;
        pass = pass && actual == want;
    }
    report(3, pass, std::to_string(checked) + " stage counts match the predictions");
    CHECK(pass);
}

TEST_CASE("criterion 4: necessity at desk scale") {
    Stopwatch sw;
    bool pass = true;
    int combos = 0;
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n / 2; ++k)
            for (int ell = 1; ell < n; ++ell) {
                OracleOptions opts;
                opts.symmetric_ell = ell;
                opts.limit = 1;
                const bool exists = !oracle_enumerate(k, n, opts).empty();
                pass = pass && exists == feasibility(k, n, ell).feasible;
                ++combos;
            }
    const double t = sw.seconds();
    pass = pass && t < 600.0;
    report(4, pass,
           std::to_string(combos) + " (k,n,ell) combinations, existence iff congruence, " +
               std::to_string(t) + "s");
    CHECK(pass);
}

TEST_CASE("criterion 5: oracle counts against the triangulation enumerator") {
    const auto c26 = oracle_enumerate(2, 6).size();
    const auto c27 = oracle_enumerate(2, 7).size();
    const long long t6 = count_triangulations(6);
    const long long t7 = count_triangulations(7);
    const bool pass = c26 == 14 && c27 == 42 && t6 == 14 && t7 == 42;
    report(5, pass,
           "oracle(2,6)=" + std::to_string(c26) + " oracle(2,7)=" + std::to_string(c27) +
               " triangulations: " + std::to_string(t6) + ", " + std::to_string(t7));
    CHECK(pass);
}

TEST_CASE("criterion 6: clique and tiling fidelity") {
    Collection ex36 = coll(6, 3,
                           {{1, 2, 3},
                            {2, 3, 4},
                            {3, 4, 5},
                            {4, 5, 6},
                            {1, 5, 6},
                            {1, 2, 6},
                            {1, 3, 6},
                            {2, 3, 6},
                            {3, 4, 6},
                            {3, 5, 6}});
    bool pass = true;

    std::set<std::vector<int>> whites, blacks;
    std::vector<KSubset> w36, b1356;
    for (const Clique& c : cliques(ex36)) {
        if (!c.nontrivial()) continue;
        if (c.color == Clique::Color::White) {
            whites.insert(c.core);
            if (c.core == std::vector<int>{3, 6}) w36 = c.members;
        } else {
            blacks.insert(c.core);
            if (c.core == std::vector<int>{1, 3, 5, 6}) b1356 = c.members;
        }
    }
    pass = pass && whites == std::set<std::vector<int>>{{2, 3}, {5, 6}, {1, 6}, {3, 4}, {3, 6}};
    pass = pass && blacks == std::set<std::vector<int>>{
                                 {1, 2, 3, 6}, {3, 4, 5, 6}, {2, 3, 4, 6}, {1, 3, 5, 6}};
    pass = pass && w36 == std::vector<KSubset>{ks({1, 3, 6}, 6), ks({2, 3, 6}, 6),
                                               ks({3, 4, 6}, 6), ks({3, 5, 6}, 6)};
    pass = pass && std::set<KSubset>(b1356.begin(), b1356.end()) ==
                       std::set<KSubset>{ks({1, 3, 6}, 6), ks({1, 5, 6}, 6), ks({3, 5, 6}, 6)};

    bool tiling_ok = true;
    try {
        PlabicTiling T = build_tiling(ex36); // Euler and boundary checks inside
        tiling_ok = T.vertices.size() == 10 && T.faces.size() == 9 && T.edges.size() == 18;
    } catch (const std::exception&) {
        tiling_ok = false;
    }
    pass = pass && tiling_ok;
    report(6, pass, "clique lists and tiling checks for the 10-element example");
    CHECK(pass);
}

TEST_CASE("criterion 7: duality round-trip over the criterion-2 sweep") {
    bool pass = true;
    int instances = 0;
    for (const Feasibility& f : feasible_sweep(12, false)) {
        if (f.n < 3) continue; // a 2-gon carries no tiling
        Collection D = generate(f.k, f.n, f.ell);
        PlabicGraph G = dual_plabic_graph(build_tiling(D));
        pass = pass && face_label_collection(G) == D;
        ++instances;
    }
    report(7, pass, "F(dual(tiling(D))) = D on " + std::to_string(instances) + " instances");
    CHECK(pass);
}

TEST_CASE("criterion 8: pipelines (3,6,3), (2,6,3), (4,8,2)") {
    bool pass = true;
    std::string detail;
    struct Want {
        int k, n, ell;
        std::vector<int> ranks;
        std::string braid;
    };
    for (const Want& w : std::vector<Want>{
             {3, 6, 3, {3, 2, 1}, "s1 s2 s1 s2 s1 s2 s1 s2 s1 s2 s1 s2"},
             {2, 6, 3, {2, 1}, "s1 s1 s1 s1 s1 s1"},
             {4, 8, 2, {4, 3, 2, 1},
              "s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3"}}) {
        Stopwatch sw;
        PipelineReport rep = symmetric_weave_pipeline(w.k, w.n, w.ell);
        bool ok = rep.ranks == w.ranks && rep.braid.to_string() == w.braid &&
                  rep.weave_violations.empty() && rep.tiling_cert.ok && rep.dual_cert.ok &&
                  rep.weave_cert.ok && sw.seconds() < 5.0;
        detail += "(" + std::to_string(w.k) + "," + std::to_string(w.n) + "," +
                  std::to_string(w.ell) + (ok ? ") ok " : ") FAIL ");
        pass = pass && ok;
    }
    report(8, pass, detail);
    CHECK(pass);
}

TEST_CASE("criterion 9: folding case (3,6,4)") {
    GeneratorTrace trace = generate_trace(3, 6, 4);
    bool pass = trace.folded && trace.fold.has_value();
    if (pass) {
        pass = pass && trace.fold->n_prime == 12;
        pass = pass && trace.fold->dropped_stages == 2;
        const Collection& D = trace.result;
        pass = pass && D.size() == 10;
        pass = pass && is_ws_collection(D).separated;
        pass = pass && is_rho_symmetric(D, 4).symmetric;
        MaximalityReport rep = check_maximal(D);
        pass = pass && rep.maximal && rep.has_all_intervals;
        // fold map convention: F(a + 2x) = a + 4x
        pass = pass && fold_map_apply(ks({3}, 6), 4) == ks({5}, 12);
        pass = pass && fold_map_apply(ks({6}, 6), 4) == ks({10}, 12);
    }
    report(9, pass, "n' = 12, two orbit stages removed, |D| = 10, all checks");
    CHECK(pass);
}

TEST_CASE("criterion 10: informal and formal processes agree") {
    bool pass = true;
    int instances = 0;
    for (int n = 2; n <= 9; ++n)
        for (int ell = 1; ell < n; ++ell) {
            if (n % ell != 0) continue;
            for (int k = 1; k < n; ++k) {
                Feasibility f = feasibility(k, n, ell);
                if (!f.feasible) continue;
                OrbitOrder order = OrbitOrder::descending(ell);
                pass = pass && informal_generate(f, order).result ==
                                   generate_divisible(f, order);
                ++instances;
            }
        }
    report(10, pass, "informal = formal on " + std::to_string(instances) +
                         " divisible instances with n <= 9");
    CHECK(pass);
}

TEST_CASE("cli exit codes and determinism") {
#ifdef SYMWSC_CLI_PATH
    int code = -1;
    run_cli("feasible -k 3 -n 6 -l 3", code);
    CHECK(code == 0);
    run_cli("feasible -k 2 -n 5 -l 1", code);
    CHECK(code == 1);
    run_cli("generate -k 2 -n 5 -l 1", code);
    CHECK(code == 1);
    run_cli("generate -k 3 -n 6 -l 3 --order 1,1,1", code);
    CHECK(code == 3);

    std::string a = run_cli("pipeline -k 2 -n 6 -l 3", code);
    CHECK(code == 0);
    std::string b = run_cli("pipeline -k 2 -n 6 -l 3", code);
    CHECK(code == 0);
    json ja = json::parse(a), jb = json::parse(b);
    ja.erase("timing_ms");
    jb.erase("timing_ms");
    CHECK(dump_canonical(ja) == dump_canonical(jb));
#endif
}
