#pragma once

#include "symwsc/generator.hpp"
#include "symwsc/weave.hpp"

namespace symwsc {

/// The full chain generate -> tiling -> dual -> trivalent -> weave together
/// with the symmetry certificates at every level.
struct PipelineReport {
    Feasibility params;
    OrbitOrder order;
    GeneratorTrace trace;

    PlabicTiling tiling;
    TilingCertificate tiling_cert;

    PlabicGraph dual;
    GraphCertificate dual_cert;

    PlabicGraph trivalent;
    GraphCertificate trivalent_cert; // exact; may fail only at pinned sites
    bool trivalent_cert_contracted_ok = false;
    std::vector<Tag> trivalent_sites;

    WeaveBuild weave;
    std::vector<std::string> weave_violations;
    BraidWord braid;
    WeaveCertificate weave_cert;

    std::vector<int> ranks; // k, k-1, ..., 1
};

/// Run the whole pipeline; throws InfeasibleError for bad congruences and
/// InputError for k < 2 (no weave layers exist below rank 2).
PipelineReport symmetric_weave_pipeline(int k, int n, int ell,
                                        std::optional<OrbitOrder> order = std::nullopt);

} // namespace symwsc
