#include "symwsc/pipeline.hpp"

namespace symwsc {

PipelineReport symmetric_weave_pipeline(int k, int n, int ell,
                                        std::optional<OrbitOrder> order) {
    PipelineReport rep;
    rep.trace = generate_trace(k, n, ell, std::move(order));
    rep.params = rep.trace.params;
    rep.order = rep.trace.order;

    rep.tiling = build_tiling(rep.trace.result);
    rep.tiling_cert = rotational_symmetry_certificate(rep.tiling, ell);

    rep.dual = dual_plabic_graph(rep.tiling);
    rep.dual_cert = rotational_symmetry_certificate(rep.dual, ell);

    TrivalentResult tri = make_trivalent(rep.dual, ell);
    rep.trivalent = std::move(tri.graph);
    rep.trivalent_sites = std::move(tri.reresolution_sites);
    rep.trivalent_cert = rotational_symmetry_certificate(rep.trivalent, ell);
    if (!rep.trivalent_cert.ok) {
        PlabicGraph contracted = contract_resolutions(rep.trivalent);
        rep.trivalent_cert_contracted_ok =
            rotational_symmetry_certificate(contracted, ell).ok;
    } else {
        rep.trivalent_cert_contracted_ok = true;
    }

    rep.weave = build_weave(rep.trivalent, ell, rep.trivalent_sites);
    rep.weave_violations = validate_ngraph(rep.weave.weave);
    rep.braid = boundary_braid(rep.weave.weave);
    rep.weave_cert = weave_symmetry_certificate(rep.weave, ell);
    rep.ranks = rep.weave.ranks;
    return rep;
}

} // namespace symwsc
