#include "symwsc/json_io.hpp"
#include "symwsc/oracle.hpp"
#include "symwsc/pipeline.hpp"
#include "symwsc/render.hpp"
#include "symwsc/separation.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace symwsc;

namespace {

std::optional<OrbitOrder> make_order(const std::optional<std::vector<int>>& reps) {
    if (!reps) return std::nullopt;
    return OrbitOrder{*reps};
}

std::vector<std::vector<int>> as_lists(const Collection& c) {
    std::vector<std::vector<int>> out;
    for (const KSubset& s : c.members) out.push_back(s.elems);
    return out;
}

py::dict feasible_dict(int k, int n, int ell) {
    Feasibility f = feasibility(k, n, ell);
    py::dict d;
    d["k"] = f.k;
    d["n"] = f.n;
    d["ell"] = f.ell;
    d["g"] = f.g;
    d["d"] = f.d;
    d["feasible"] = f.feasible;
    if (f.feasible) {
        d["r"] = f.r;
        d["c"] = f.c;
    }
    return d;
}

py::dict verify_dict(const std::vector<std::vector<int>>& members, int n, int k,
                     std::optional<int> ell) {
    std::vector<KSubset> xs;
    for (const auto& m : members) xs.emplace_back(m, n);
    Collection D(n, k, std::move(xs));
    py::dict d;
    auto ws = is_ws_collection(D);
    d["separated"] = ws.separated;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    for (auto& [a, b] : ws.failing_pairs) pairs.emplace_back(a.elems, b.elems);
    d["failing_pairs"] = pairs;
    if (ws.separated) {
        auto rep = check_maximal(D);
        d["maximal"] = rep.maximal;
        d["size"] = rep.size;
        d["expected_size"] = rep.expected;
        d["has_all_intervals"] = rep.has_all_intervals;
    }
    if (ell) {
        auto sym = is_rho_symmetric(D, *ell);
        d["symmetric"] = sym.symmetric;
        std::vector<std::vector<int>> viol;
        for (const KSubset& s : sym.violators) viol.push_back(s.elems);
        d["violators"] = viol;
    }
    return d;
}

py::dict pipeline_dict(int k, int n, int ell, const std::optional<std::vector<int>>& order) {
    PipelineReport rep = symmetric_weave_pipeline(k, n, ell, make_order(order));
    py::dict d;
    d["k"] = k;
    d["n"] = n;
    d["ell"] = ell;
    d["collection"] = as_lists(rep.trace.result);
    d["size"] = rep.trace.result.size();
    d["ranks"] = rep.ranks;
    d["braid"] = rep.braid.to_string();
    d["tiling_certificate"] = rep.tiling_cert.ok;
    d["dual_certificate"] = rep.dual_cert.ok;
    d["trivalent_certificate"] = rep.trivalent_cert.ok;
    d["weave_certificate"] = rep.weave_cert.ok;
    d["weave_valid"] = rep.weave_violations.empty();
    d["reresolution_sites"] = rep.weave_cert.reresolution_sites;
    return d;
}

} // namespace

PYBIND11_MODULE(_symwsc, m) {
    m.doc() = "symmetric weakly separated collections, plabic tilings and weave N-graphs";

    py::register_exception<InfeasibleError>(m, "InfeasibleError");
    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def("feasible", &feasible_dict, py::arg("k"), py::arg("n"), py::arg("ell"),
          "Congruence test; returns d, g and the decomposition k = d*r + c.");

    m.def(
        "generate",
        [](int k, int n, int ell, const std::optional<std::vector<int>>& order) {
            return as_lists(generate(k, n, ell, make_order(order)));
        },
        py::arg("k"), py::arg("n"), py::arg("ell"), py::arg("order") = py::none(),
        "Construct a rho^ell-symmetric maximal weakly separated collection.");

    m.def(
        "generate_json",
        [](int k, int n, int ell, const std::optional<std::vector<int>>& order, bool trace) {
            GeneratorTrace t = generate_trace(k, n, ell, make_order(order));
            return dump_canonical(trace ? to_json(t) : to_json(t.result));
        },
        py::arg("k"), py::arg("n"), py::arg("ell"), py::arg("order") = py::none(),
        py::arg("trace") = false, "Collection (or full stage trace) as canonical JSON.");

    m.def(
        "is_weakly_separated",
        [](const std::vector<int>& a, const std::vector<int>& b, int n)
            -> std::pair<bool, std::optional<std::array<int, 4>>> {
            auto res = is_weakly_separated(KSubset(a, n), KSubset(b, n));
            return {res.separated, res.witness};
        },
        py::arg("a"), py::arg("b"), py::arg("n"),
        "Pairwise test; on failure the second entry is a witness a<b<c<d.");

    m.def(
        "rho_orbit",
        [](const std::vector<int>& elems, int n, int ell) {
            return as_lists(rho_orbit(KSubset(elems, n), ell));
        },
        py::arg("elems"), py::arg("n"), py::arg("ell"));

    m.def("verify", &verify_dict, py::arg("members"), py::arg("n"), py::arg("k"),
          py::arg("ell") = py::none(),
          "Weak separation, maximality and optional rho^ell closure of a collection.");

    m.def(
        "oracle",
        [](int k, int n, std::optional<int> ell, int limit) {
            OracleOptions opts;
            opts.symmetric_ell = ell;
            opts.limit = limit;
            std::vector<std::vector<std::vector<int>>> out;
            for (const Collection& D : oracle_enumerate(k, n, opts)) out.push_back(as_lists(D));
            return out;
        },
        py::arg("k"), py::arg("n"), py::arg("ell") = py::none(), py::arg("limit") = 0,
        "Exhaustive enumeration of maximal collections (rho^ell-closed when ell is given).");

    m.def("pipeline", &pipeline_dict, py::arg("k"), py::arg("n"), py::arg("ell"),
          py::arg("order") = py::none(),
          "Full chain: collection, tiling, dual graph, T-shift weave, certificates.");

    m.def(
        "pipeline_json",
        [](int k, int n, int ell, const std::optional<std::vector<int>>& order) {
            return dump_canonical(to_json(symmetric_weave_pipeline(k, n, ell, make_order(order))));
        },
        py::arg("k"), py::arg("n"), py::arg("ell"), py::arg("order") = py::none());

    m.def(
        "tiling_svg",
        [](int k, int n, int ell) {
            return render_tiling(build_tiling(generate(k, n, ell)), RenderFormat::Svg);
        },
        py::arg("k"), py::arg("n"), py::arg("ell"));

    m.attr("__version__") = kToolVersion;
}
