#include "symwsc/json_io.hpp"
#include "symwsc/oracle.hpp"
#include "symwsc/pipeline.hpp"
#include "symwsc/render.hpp"
#include "symwsc/separation.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace symwsc;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

void emit(const std::string& out_path, const json& doc) {
    const std::string text = dump_canonical(doc);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw InputError("cannot open output path " + out_path);
        f << text;
    }
}

void emit_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw InputError("cannot open output path " + out_path);
        f << text;
    }
}

std::string slurp(const std::string& in_path) {
    if (in_path.empty() || in_path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(in_path);
    if (!f) throw InputError("cannot open input path " + in_path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

OrbitOrder parse_order(const std::string& text) {
    OrbitOrder order;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            order.reps.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw InputError("bad orbit order entry '" + tok + "'");
        }
    }
    return order;
}

struct SweepRange {
    int kmin, kmax, nmin, nmax, lmin, lmax;
};

SweepRange parse_sweep(const std::string& text) {
    // "kmin..kmax,nmin..nmax,lmin..lmax"
    SweepRange r{};
    int vals[6];
    int idx = 0;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        auto dots = part.find("..");
        if (dots == std::string::npos || idx >= 6) throw InputError("bad sweep spec: " + text);
        try {
            vals[idx++] = std::stoi(part.substr(0, dots));
            vals[idx++] = std::stoi(part.substr(dots + 2));
        } catch (const std::exception&) {
            throw InputError("bad sweep spec: " + text);
        }
    }
    if (idx != 6) throw InputError("sweep spec needs three ranges: " + text);
    r.kmin = vals[0];
    r.kmax = vals[1];
    r.nmin = vals[2];
    r.nmax = vals[3];
    r.lmin = vals[4];
    r.lmax = vals[5];
    return r;
}

Collection input_collection(const std::string& in_path, int k, int n, int ell,
                            const std::string& order_text) {
    if (!in_path.empty()) return collection_from_json(parse_payload(slurp(in_path)));
    if (k <= 0 || n <= 0 || ell <= 0)
        throw InputError("either --in or all of -k, -n, -l are required");
    std::optional<OrbitOrder> order;
    if (!order_text.empty()) order = parse_order(order_text);
    return generate(k, n, ell, order);
}

json verify_payload(const Collection& D, std::optional<int> ell, bool& passed) {
    json j;
    auto ws = is_ws_collection(D);
    j["separated"] = ws.separated;
    json pairs = json::array();
    for (auto& [a, b] : ws.failing_pairs)
        pairs.push_back(json{{"a", to_json(a)}, {"b", to_json(b)}});
    j["failing_pairs"] = pairs;
    passed = ws.separated;

    if (ws.separated) {
        auto rep = check_maximal(D);
        j["maximal"] = rep.maximal;
        j["size"] = rep.size;
        j["expected_size"] = rep.expected;
        j["has_all_intervals"] = rep.has_all_intervals;
        passed = passed && rep.maximal;
    }
    if (ell) {
        auto sym = is_rho_symmetric(D, *ell);
        j["symmetric"] = sym.symmetric;
        json viol = json::array();
        for (const KSubset& s : sym.violators) viol.push_back(to_json(s));
        j["violators"] = viol;
        passed = passed && sym.symmetric;
    }
    return j;
}

json pipeline_summary(const PipelineReport& rep) {
    return json{{"k", rep.params.k},
                {"n", rep.params.n},
                {"ell", rep.params.ell},
                {"size", rep.trace.result.size()},
                {"ranks", rep.ranks},
                {"braid", rep.braid.to_string()},
                {"tiling_certificate", rep.tiling_cert.ok},
                {"dual_certificate", rep.dual_cert.ok},
                {"weave_certificate", rep.weave_cert.ok},
                {"weave_valid", rep.weave_violations.empty()},
                {"reresolution_sites", rep.weave_cert.reresolution_sites}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric weakly separated collections, plabic tilings and weave N-graphs"};
    app.require_subcommand(1);

    int k = 0, n = 0, ell = 0, limit = 0;
    std::string order_text, out_path, in_path, format = "svg", sweep_text;
    bool trace = false, symmetric = false, seedless = false;
    app.add_flag("--seedless", seedless,
                 "reject nondeterministic fallbacks (all paths here are deterministic)");

    auto add_knl = [&](CLI::App* cmd, bool required) {
        auto* ko = cmd->add_option("-k", k, "subset size");
        auto* no = cmd->add_option("-n", n, "ground set size");
        auto* lo = cmd->add_option("-l,--ell", ell, "shift");
        if (required) {
            ko->required();
            no->required();
            lo->required();
        }
    };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "output path"); };

    auto* c_feasible = app.add_subcommand("feasible", "congruence test for (k, n, ell)");
    add_knl(c_feasible, true);
    add_out(c_feasible);

    auto* c_generate = app.add_subcommand("generate", "construct a symmetric collection");
    add_knl(c_generate, true);
    c_generate->add_option("--order", order_text, "orbit order, e.g. 3,2,1");
    c_generate->add_flag("--trace", trace, "emit the full stage trace");
    add_out(c_generate);

    auto* c_verify = app.add_subcommand("verify", "check a collection payload");
    c_verify->add_option("--in", in_path, "collection JSON (default stdin)");
    c_verify->add_option("-l,--ell", ell, "also check rho^ell closure");
    add_out(c_verify);

    auto* c_cliques = app.add_subcommand("cliques", "white and black cliques");
    c_cliques->add_option("--in", in_path, "collection JSON");
    add_knl(c_cliques, false);
    c_cliques->add_option("--order", order_text, "orbit order");
    add_out(c_cliques);

    auto* c_tiling = app.add_subcommand("tiling", "build the plabic tiling");
    c_tiling->add_option("--in", in_path, "collection JSON");
    add_knl(c_tiling, false);
    c_tiling->add_option("--order", order_text, "orbit order");
    add_out(c_tiling);

    auto* c_dual = app.add_subcommand("dual", "dual plabic graph of the tiling");
    c_dual->add_option("--in", in_path, "collection JSON");
    add_knl(c_dual, false);
    c_dual->add_option("--order", order_text, "orbit order");
    add_out(c_dual);

    auto* c_tshift = app.add_subcommand("tshift", "one T-shift of a trivalent graph");
    c_tshift->add_option("--in", in_path, "plabic graph JSON (default: trivalent dual)");
    add_knl(c_tshift, false);
    c_tshift->add_option("--order", order_text, "orbit order");
    add_out(c_tshift);

    auto* c_weave = app.add_subcommand("weave", "iterated T-shift weave");
    c_weave->add_option("--in", in_path, "plabic graph JSON (default: trivalent dual)");
    add_knl(c_weave, false);
    c_weave->add_option("--order", order_text, "orbit order");
    add_out(c_weave);

    auto* c_pipeline = app.add_subcommand("pipeline", "full symmetric weave pipeline");
    add_knl(c_pipeline, false);
    c_pipeline->add_option("--order", order_text, "orbit order");
    c_pipeline->add_option("--sweep", sweep_text, "grid kmin..kmax,nmin..nmax,lmin..lmax");
    add_out(c_pipeline);

    auto* c_oracle = app.add_subcommand("oracle", "exhaustive enumeration");
    add_knl(c_oracle, false);
    c_oracle->add_flag("--symmetric", symmetric, "restrict to rho^ell-closed collections");
    c_oracle->add_option("--limit", limit, "stop after this many collections");
    add_out(c_oracle);

    auto* c_render = app.add_subcommand("render", "draw an artifact");
    c_render->add_option("--in", in_path, "artifact JSON")->required();
    c_render->add_option("--format", format, "svg or tikz");
    add_out(c_render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 3;
    }

    Timer timer;
    try {
        std::optional<OrbitOrder> order;
        if (!order_text.empty()) order = parse_order(order_text);

        if (c_feasible->parsed()) {
            Feasibility f = feasibility(k, n, ell);
            emit(out_path, make_envelope("feasibility", "feasible",
                                         json{{"k", k}, {"n", n}, {"ell", ell}}, to_json(f),
                                         timer.ms()));
            return f.feasible ? 0 : 1;
        }

        if (c_generate->parsed()) {
            GeneratorTrace t = generate_trace(k, n, ell, order);
            json input{{"k", k}, {"n", n}, {"ell", ell}, {"order", t.order.reps}};
            json payload = trace ? to_json(t) : to_json(t.result);
            emit(out_path, make_envelope(trace ? "generator_trace" : "collection", "generate",
                                         input, payload, timer.ms()));
            return 0;
        }

        if (c_verify->parsed()) {
            Collection D = collection_from_json(parse_payload(slurp(in_path)));
            std::optional<int> sym_ell;
            if (ell > 0) sym_ell = ell;
            bool passed = false;
            json payload = verify_payload(D, sym_ell, passed);
            emit(out_path, make_envelope("verification", "verify",
                                         json{{"n", D.n}, {"k", D.k}}, payload, timer.ms()));
            return passed ? 0 : 2;
        }

        if (c_cliques->parsed()) {
            Collection D = input_collection(in_path, k, n, ell, order_text);
            json payload = json::array();
            for (const Clique& c : cliques(D)) payload.push_back(to_json(c));
            emit(out_path, make_envelope("cliques", "cliques", to_json(D), payload,
                                         timer.ms()));
            return 0;
        }

        if (c_tiling->parsed()) {
            Collection D = input_collection(in_path, k, n, ell, order_text);
            PlabicTiling T = build_tiling(D);
            emit(out_path,
                 make_envelope("tiling", "tiling", to_json(D), to_json(T), timer.ms()));
            return 0;
        }

        if (c_dual->parsed()) {
            Collection D = input_collection(in_path, k, n, ell, order_text);
            PlabicGraph G = dual_plabic_graph(build_tiling(D));
            emit(out_path, make_envelope("plabic_graph", "dual", to_json(D), to_json(G),
                                         timer.ms()));
            return 0;
        }

        if (c_tshift->parsed() || c_weave->parsed()) {
            PlabicGraph G;
            int eff_ell = ell;
            if (!in_path.empty()) {
                G = graph_from_json(parse_payload(slurp(in_path)));
                if (eff_ell <= 0) eff_ell = G.n;
            } else {
                Collection D = input_collection("", k, n, ell, order_text);
                G = make_trivalent(dual_plabic_graph(build_tiling(D)), ell).graph;
                eff_ell = ell;
            }
            if (c_tshift->parsed()) {
                TShiftResult s = t_shift(G, eff_ell);
                json sites = json::array();
                for (const Tag& t : s.reresolution_sites) sites.push_back(t.to_string());
                json payload{{"graph", to_json(s.graph)},
                             {"rank_in", s.rank_in},
                             {"rank_out", s.rank_out},
                             {"reresolution_sites", sites}};
                emit(out_path,
                     make_envelope("tshift", "tshift", to_json(G), payload, timer.ms()));
            } else {
                WeaveBuild wb = build_weave(G, eff_ell);
                auto bad = validate_ngraph(wb.weave);
                json payload{{"weave_build", to_json(wb)},
                             {"braid", to_json(boundary_braid(wb.weave))},
                             {"violations", bad}};
                emit(out_path,
                     make_envelope("weave", "weave", to_json(G), payload, timer.ms()));
                if (!bad.empty()) return 2;
            }
            return 0;
        }

        if (c_pipeline->parsed()) {
            if (!sweep_text.empty()) {
                SweepRange r = parse_sweep(sweep_text);
                json rows = json::array();
                for (int nn = r.nmin; nn <= r.nmax; ++nn)
                    for (int kk = r.kmin; kk <= std::min(r.kmax, nn - 1); ++kk)
                        for (int ll = r.lmin; ll <= std::min(r.lmax, nn - 1); ++ll) {
                            Feasibility f = feasibility(kk, nn, ll);
                            if (!f.feasible || kk < 2) {
                                rows.push_back(json{{"k", kk},
                                                    {"n", nn},
                                                    {"ell", ll},
                                                    {"feasible", f.feasible},
                                                    {"skipped", true}});
                                continue;
                            }
                            PipelineReport rep = symmetric_weave_pipeline(kk, nn, ll);
                            json row = pipeline_summary(rep);
                            row["feasible"] = true;
                            rows.push_back(std::move(row));
                        }
                emit(out_path, make_envelope("pipeline_sweep", "pipeline",
                                             json{{"sweep", sweep_text}}, rows, timer.ms()));
                return 0;
            }
            if (k <= 0 || n <= 0 || ell <= 0)
                throw InputError("pipeline requires -k, -n, -l or --sweep");
            PipelineReport rep = symmetric_weave_pipeline(k, n, ell, order);
            emit(out_path,
                 make_envelope("pipeline", "pipeline",
                               json{{"k", k}, {"n", n}, {"ell", ell}, {"order", rep.order.reps}},
                               to_json(rep), timer.ms()));
            return 0;
        }

        if (c_oracle->parsed()) {
            if (k <= 0 || n <= 0) throw InputError("oracle requires -k and -n");
            OracleOptions opts;
            if (symmetric) {
                if (ell <= 0) throw InputError("--symmetric requires -l");
                opts.symmetric_ell = ell;
            }
            opts.limit = limit;
            auto found = oracle_enumerate(k, n, opts);
            json cols = json::array();
            for (const Collection& D : found) cols.push_back(to_json(D));
            json payload{{"count", found.size()}, {"collections", cols}};
            emit(out_path, make_envelope("oracle", "oracle",
                                         json{{"k", k},
                                              {"n", n},
                                              {"symmetric", symmetric},
                                              {"ell", ell},
                                              {"limit", limit}},
                                         payload, timer.ms()));
            return 0;
        }

        if (c_render->parsed()) {
            RenderFormat fmt = parse_format(format);
            std::string kind;
            json payload = parse_payload(slurp(in_path), &kind);
            std::string doc;
            if (kind == "tiling")
                doc = render_tiling(tiling_from_json(payload), fmt);
            else if (kind == "plabic_graph")
                doc = render_graph(graph_from_json(payload), fmt);
            else if (kind == "tshift")
                doc = render_graph(graph_from_json(payload.at("graph")), fmt);
            else if (kind == "weave")
                doc = render_weave(weave_from_json(payload.at("weave_build").at("weave")), fmt);
            else if (kind == "pipeline")
                doc = render_weave(weave_from_json(payload.at("weave_build").at("weave")), fmt);
            else if (kind == "collection" || payload.contains("members"))
                doc = render_tiling(build_tiling(collection_from_json(payload)), fmt);
            else if (payload.contains("boundary"))
                doc = render_weave(weave_from_json(payload), fmt);
            else if (payload.contains("edges") && payload.contains("vertices"))
                doc = render_graph(graph_from_json(payload), fmt);
            else
                throw InputError("unsupported artifact kind for rendering: " + kind);
            emit_text(out_path, doc);
            return 0;
        }

        throw InputError("no subcommand executed");
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
