// rptool: decide RP/AP on small graphs, run the semistar engine, check the
// closed-form conditions, build the named families, and verify certificates
// and the shipped table data. Exit codes: 0 = verdict true / suite pass,
// 1 = verdict false / suite fail, 2 = error.

#include "rp/cert_io.hpp"
#include "rp/conditions.hpp"
#include "rp/constructions.hpp"
#include "rp/errors.hpp"
#include "rp/graph_algos.hpp"
#include "rp/paper_tables.hpp"
#include "rp/report.hpp"
#include "rp/semistar.hpp"
#include "rp/solver.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace rp;

namespace {

SolverBudget budget_from_env() {
    SolverBudget budget;
    if (const char* env = std::getenv("RP_BUDGET_N")) {
        const int n = std::atoi(env);
        if (n >= 1) {
            budget.rp_max_n = n;
            budget.ap_max_n = std::min(n, 15);
        }
    }
    return budget;
}

// A graph argument is a family expression unless it names a readable file,
// in which case it is loaded as an edge list.
Graph load_graph_arg(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        if (!in) throw parse_error("cannot open graph file '" + arg + "'");
        return Graph::read_edge_list(in);
    }
    return parse_graph_expr(arg);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

int run_check(const std::string& what, const std::string& graph_arg, const std::string& cert_file) {
    const Graph g = load_graph_arg(graph_arg);
    const SolverBudget budget = budget_from_env();
    if (what == "rp") {
        RpSolver solver(budget);
        const auto result = solver.is_rp(g);
        std::cout << "rp " << (result.verdict ? "true" : "false") << "\n";
        if (!result.verdict) {
            const auto failing = solver.first_failing_size(g);
            if (failing.disconnected)
                std::cout << "reason disconnected\n";
            else if (failing.size)
                std::cout << "first_failing_size " << *failing.size << "\n";
        } else if (!cert_file.empty()) {
            write_file(cert_file, serialize_certificate(*result.certificate));
            std::cout << "certificate " << cert_file << "\n";
        }
        return result.verdict ? 0 : 1;
    }
    if (what == "ap") {
        ApSolver solver(budget);
        const auto result = solver.is_ap(g, false);
        std::cout << "ap " << (result.verdict ? "true" : "false") << "\n";
        if (!result.verdict && result.failing_partition)
            std::cout << "failing_partition " << result.failing_partition->str() << "\n";
        return result.verdict ? 0 : 1;
    }
    if (what == "traceable") {
        const auto result = is_traceable(g);
        std::cout << "traceable " << (result.traceable ? "true" : "false") << "\n";
        if (result.traceable) {
            std::cout << "path";
            for (int v : result.path) std::cout << " " << v;
            std::cout << "\n";
        }
        return result.traceable ? 0 : 1;
    }
    if (what == "matchable") {
        const auto status = matching_status(g);
        const char* name = status == MatchingStatus::perfect        ? "perfect"
                           : status == MatchingStatus::near_perfect ? "near_perfect"
                                                                    : "neither";
        std::cout << "matching " << name << "\n";
        return status == MatchingStatus::neither ? 1 : 0;
    }
    throw std::runtime_error("unknown check '" + what + "' (rp|ap|traceable|matchable)");
}

int run_metrics(const std::string& graph_arg, bool toughness_only) {
    const Graph g = load_graph_arg(graph_arg);
    const auto report = metrics(g);
    if (!toughness_only) {
        std::cout << "n " << g.order() << "\nm " << g.edge_count() << "\n";
        std::cout << "alpha " << report.alpha << "\n";
        if (report.sigma)
            std::cout << "sigma " << *report.sigma << "\n";
        else
            std::cout << "sigma none (complete graph)\n";
        if (report.kappa)
            std::cout << "kappa " << *report.kappa << "\n";
        else
            std::cout << "kappa none (complete graph)\n";
    }
    if (report.toughness) {
        std::cout << "toughness " << report.toughness->str() << " witness "
                  << report.toughness_witness.str() << "\n";
    } else {
        const char* why = report.toughness_status == AbsenceReason::complete_graph ? "complete graph"
                          : report.toughness_status == AbsenceReason::disconnected ? "disconnected"
                                                                                   : "over budget";
        std::cout << "toughness none (" << why << ")\n";
    }
    return 0;
}

RunReport suite_trees() {
    RunReport report;
    report.suite = "trees";
    Timer timer;
    RpSolver solver;
    // Tripode table against the generic solver, every tripode with n <= 13.
    for (int a = 1; a <= 11; ++a)
        for (int b = a; a + b <= 12; ++b)
            for (int c = b; a + b + c + 1 <= 13; ++c) {
                const Graph t = build_tripode(a, b, c);
                const bool closed_form = tree_is_rp(t).is_rp;
                const bool solved = solver.is_rp(t).verdict;
                const std::string id = "tripode/" + std::to_string(a) + "," + std::to_string(b) + "," +
                                       std::to_string(c);
                if (closed_form == solved)
                    report.ok(id);
                else
                    report.fail(id, "closed form and solver disagree",
                                "rptool check rp \"T(" + std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + ")\"");
            }
    // Semistar form of the table: K1(a,b,c) RP exactly on the admitted rows.
    SemistarSolver signatures;
    int mismatches = 0;
    int first_a = 0, first_b = 0, first_c = 0;
    for (int a = 1; a <= 30; ++a)
        for (int b = a; b <= 30; ++b)
            for (int c = b; c <= 30; ++c) {
                const bool expected = rp_triple(a, b, c);
                const bool got = signatures.is_rp(SemistarSignature(1, {a, b, c}));
                if (expected != got && mismatches++ == 0) {
                    first_a = a;
                    first_b = b;
                    first_c = c;
                }
            }
    if (mismatches == 0)
        report.ok("semistar-triples/c<=30");
    else
        report.fail("semistar-triples/c<=30",
                    std::to_string(mismatches) + " mismatches, first at (" + std::to_string(first_a) +
                        "," + std::to_string(first_b) + "," + std::to_string(first_c) + ")",
                    "rptool semistar check \"K1(" + std::to_string(first_a) + "," +
                        std::to_string(first_b) + "," + std::to_string(first_c) + ")\"");
    report.wall_seconds = timer.seconds();
    return report;
}

RunReport suite_minimal() {
    RunReport report;
    report.suite = "minimal";
    Timer timer;
    SemistarSolver solver;

    const auto m13 = enumerate_minimal_rp_semistars(solver, 1, 3, 8);
    std::vector<std::string> got13;
    for (const auto& s : m13.minimal_signatures) got13.push_back(s.str());
    if (got13 == std::vector<std::string>{"K1(1,1,2)"})
        report.ok("minimal-1-3/bound8");
    else
        report.fail("minimal-1-3/bound8", "expected exactly {K1(1,1,2)}",
                    "rptool semistar minimal 1 3 --bound 8");

    const auto m25 = enumerate_minimal_rp_semistars(solver, 2, 5, 8);
    std::vector<std::string> got25;
    for (const auto& s : m25.minimal_signatures) got25.push_back(s.str());
    if (got25 == std::vector<std::string>{"K2(1,1,1,2,4)", "K2(1,1,2,2,3)"})
        report.ok("minimal-2-5/bound8");
    else
        report.fail("minimal-2-5/bound8", "expected exactly {K2(1,1,1,2,4), K2(1,1,2,2,3)}",
                    "rptool semistar minimal 2 5 --bound 8");

    const SemistarSignature big(3, {1, 1, 1, 2, 2, 3, 4, 6});
    if (solver.is_rp(big))
        report.ok("semistar-3-8/rp");
    else
        report.fail("semistar-3-8/rp", "K3(1,1,1,2,2,3,4,6) not decided RP",
                    "rptool semistar check \"K3(1,1,1,2,2,3,4,6)\"");
    const auto minimality = check_minimality(solver, big);
    if (minimality.is_minimal)
        report.ok("semistar-3-8/minimal");
    else
        report.fail("semistar-3-8/minimal",
                    "dominated RP witness " +
                        (minimality.witness ? minimality.witness->str() : std::string("?")),
                    "rptool semistar check \"" +
                        (minimality.witness ? minimality.witness->str() : std::string("?")) + "\"");
    report.wall_seconds = timer.seconds();
    return report;
}

RunReport suite_bounds() {
    RunReport report;
    report.suite = "bounds";
    Timer timer;
    SemistarSolver signatures;
    RpSolver solver;

    // K2(1,1,2,6,k) family.
    bool family_ok = true;
    int family_bad = -1;
    for (int k = 0; k <= 50; ++k)
        if (!signatures.is_rp(SemistarSignature(2, {1, 1, 2, 6, k}))) {
            family_ok = false;
            family_bad = k;
            break;
        }
    if (family_ok)
        report.ok("family-k2-1126k/k<=50");
    else
        report.fail("family-k2-1126k/k<=50", "not RP at k=" + std::to_string(family_bad),
                    "rptool semistar check \"K2(1,1,2,6," + std::to_string(family_bad) + ")\"");

    // Sharp component counts: 3|S|-1 met at |S|=3 and |S|=2.
    {
        const Graph g = realize(SemistarSignature(3, {1, 1, 1, 2, 2, 3, 4, 6}));
        const auto max3 = max_components_at_cut_size(g, 3);
        if (max3.components == 8 && toughness_bound_check_bounded(g, true, 4).consistent)
            report.ok("sharpness/3-8");
        else
            report.fail("sharpness/3-8", "expected max c = 8 = 3*3-1 at |S| = 3",
                        "rptool toughness \"K3(1,1,1,2,2,3,4,6)\"");
    }
    {
        const SemistarSignature s(2, {1, 1, 2, 3, 4});
        const Graph g = realize(s);
        const auto max2 = max_components_at_cut_size(g, 2);
        if (signatures.is_rp(s) && max2.components == 5 && toughness_bound_check(g, true).consistent)
            report.ok("sharpness/2-5");
        else
            report.fail("sharpness/2-5", "expected RP with max c = 5 = 3*2-1 at |S| = 2",
                        "rptool semistar check \"K2(1,1,2,3,4)\"");
    }

    // The k=3 mod-cut violation of K2(1,1,1,2,2).
    {
        const Graph g = realize(SemistarSignature(2, {1, 1, 1, 2, 2}));
        const auto r = mod_cut_check(g, VertexSet::of({0, 1}, g.order()), 3);
        if (!r.satisfied && r.w_k == Rational{7, 2} && r.bound == Rational{2, 1})
            report.ok("modcut/k2-11122");
        else
            report.fail("modcut/k2-11122", "expected w_3 = 7/2 > 2", "rptool conditions modcut \"K2(1,1,1,2,2)\"");
        if (!signatures.is_rp(SemistarSignature(2, {1, 1, 1, 2, 2})))
            report.ok("modcut/k2-11122-not-rp");
        else
            report.fail("modcut/k2-11122-not-rp", "solver disagrees with the mod-cut violation",
                        "rptool semistar check \"K2(1,1,1,2,2)\"");
    }

    // Balloons: k = 6 impossible, the named k = 5 balloons are RP.
    {
        const bool b6 = solver.is_rp(build_balloon({1, 1, 1, 1, 1, 1})).verdict;
        if (!b6)
            report.ok("balloon/k6-not-rp");
        else
            report.fail("balloon/k6-not-rp", "B(1,1,1,1,1,1) decided RP", "rptool check rp \"B(1,1,1,1,1,1)\"");
        if (solver.is_rp(build_balloon({1, 1, 2, 3, 2})).verdict)
            report.ok("balloon/11232-rp");
        else
            report.fail("balloon/11232-rp", "B(1,1,2,3,2) not decided RP", "rptool check rp \"B(1,1,2,3,2)\"");
        if (solver.is_rp(build_balloon({1, 1, 2, 3, 4})).verdict)
            report.ok("balloon/11234-rp");
        else
            report.fail("balloon/11234-rp", "B(1,1,2,3,4) not decided RP", "rptool check rp \"B(1,1,2,3,4)\"");
    }

    // Corollary family cuts: |S| = s, c = 2s+1, recomputed.
    for (int s = 1; s <= 3; ++s)
        for (int j = 1; j <= 2; ++j) {
            const std::string id = "family-H/" + std::to_string(s) + "," + std::to_string(j);
            const auto built = build_corollary_family(s, j, signatures, solver);
            std::string err;
            if (!built.designated_cut || built.designated_cut->size() != s)
                err = "designated cut size mismatch";
            else if (static_cast<int>(built.graph.components(*built.designated_cut).size()) != 2 * s + 1)
                err = "cut does not leave 2s+1 components";
            else if (!built.certificate || !verify_certificate(built.graph, *built.certificate).valid)
                err = "certificate missing or invalid";
            if (err.empty())
                report.ok(id);
            else
                report.fail(id, err, "rptool construct \"H(" + std::to_string(s) + "," + std::to_string(j) + ")\"");
        }
    report.wall_seconds = timer.seconds();
    return report;
}

int run_verify_paper(const std::string& suite, const std::string& data_file) {
    std::vector<RunReport> reports;
    if (suite == "tables" || suite == "all") {
        Timer timer;
        SemistarSolver solver;
        const auto tables = load_paper_tables(data_file.empty() ? default_paper_tables_path() : data_file);
        auto report = verify_paper_tables(tables, solver);
        report.wall_seconds = timer.seconds();
        reports.push_back(std::move(report));
    }
    if (suite == "trees" || suite == "all") reports.push_back(suite_trees());
    if (suite == "minimal" || suite == "all") reports.push_back(suite_minimal());
    if (suite == "bounds" || suite == "all") reports.push_back(suite_bounds());
    if (reports.empty()) throw std::runtime_error("unknown suite '" + suite + "' (tables|trees|minimal|bounds|all)");
    bool all_pass = true;
    for (const auto& report : reports) {
        print_report(std::cout, report);
        all_pass = all_pass && report.passed();
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact decision, construction and verification toolkit for recursively partitionable graphs"};
    app.require_subcommand(1);

    std::string check_what, check_graph, check_cert;
    auto* check = app.add_subcommand("check", "Decide rp|ap|traceable|matchable for a graph");
    check->add_option("what", check_what, "rp|ap|traceable|matchable")->required();
    check->add_option("graph", check_graph, "graph expression or edge-list file")->required();
    check->add_option("--cert", check_cert, "write an RP certificate (JSON) on a true verdict");

    auto* semistar = app.add_subcommand("semistar", "Signature engine");
    std::string ss_sig, ss_cert;
    auto* ss_check = semistar->add_subcommand("check", "Decide RP for a semistar signature");
    ss_check->add_option("signature", ss_sig, "e.g. K2(1,1,2,6,3)")->required();
    ss_check->add_option("--cert", ss_cert, "write a signature certificate (JSON)");
    int ss_b0 = 0, ss_k = 0, ss_bound = 0;
    auto* ss_minimal = semistar->add_subcommand("minimal", "Enumerate minimal (b0,k) RP semistars");
    ss_minimal->add_option("b0", ss_b0)->required();
    ss_minimal->add_option("k", ss_k)->required();
    ss_minimal->add_option("--bound", ss_bound, "per-entry search ceiling")->required();
    std::string ssv_sig, ssv_file;
    auto* ss_verify = semistar->add_subcommand("verify", "Verify a signature certificate file");
    ss_verify->add_option("signature", ssv_sig)->required();
    ss_verify->add_option("cert_file", ssv_file)->required();

    std::string metrics_graph;
    auto* metrics_cmd = app.add_subcommand("metrics", "alpha, sigma, kappa, toughness");
    metrics_cmd->add_option("graph", metrics_graph)->required();

    std::string toughness_graph;
    auto* toughness_cmd = app.add_subcommand("toughness", "exact toughness with witness");
    toughness_cmd->add_option("graph", toughness_graph)->required();

    auto* conditions = app.add_subcommand("conditions", "Necessary-condition checks");
    std::string cond_graph;
    int cond_max_cut = 4, cond_k = 2;
    auto* modcut = conditions->add_subcommand("modcut", "scan for a mod-k cut violation");
    modcut->add_option("graph", cond_graph)->required();
    modcut->add_option("--max-cut", cond_max_cut, "largest |S| scanned (default 4)");
    std::string spider_graph;
    auto* spider = conditions->add_subcommand("spider", "spanning K_{1,k}-subdivision obstruction");
    spider->add_option("graph", spider_graph)->required();
    spider->add_option("k", cond_k, "spider arity (default 2: Hamiltonian path)");
    spider->add_option("--max-cut", cond_max_cut, "largest |S| scanned (default 4)");
    std::string treerp_graph;
    auto* treerp = conditions->add_subcommand("treerp", "closed-form RP decision for trees");
    treerp->add_option("graph", treerp_graph)->required();
    std::string rpspan_graph;
    auto* rpspan = conditions->add_subcommand("rpspan", "RP spanning tree search");
    rpspan->add_option("graph", rpspan_graph)->required();

    std::string construct_expr, construct_out, construct_cert;
    auto* construct = app.add_subcommand("construct", "Build a named family graph");
    construct->add_option("family", construct_expr, "family expression, e.g. H(3,1)")->required();
    construct->add_option("--out", construct_out, "write the edge list to a file");
    construct->add_option("--cert", construct_cert, "write the construction certificate when available");

    auto* cert = app.add_subcommand("cert", "Certificate operations");
    std::string cv_graph, cv_file;
    auto* cert_verify_cmd = cert->add_subcommand("verify", "Verify a certificate file against a graph");
    cert_verify_cmd->add_option("graph", cv_graph)->required();
    cert_verify_cmd->add_option("cert_file", cv_file)->required();

    auto* verify = app.add_subcommand("verify", "Reproduce the named results at desk scale");
    std::string vp_suite = "all", vp_data;
    auto* verify_paper = verify->add_subcommand("paper", "table/tree/minimal/bound suites");
    verify_paper->add_option("--suite", vp_suite, "tables|trees|minimal|bounds|all");
    verify_paper->add_option("--data", vp_data, "table data file (default: shipped copy)");

    try {
        app.parse(argc, argv);

        if (*check) return run_check(check_what, check_graph, check_cert);
        if (*ss_check) {
            SemistarSolver solver;
            const auto sig = SemistarSignature::parse(ss_sig);
            const auto result = solver.is_rp_certified(sig);
            std::cout << "signature " << sig.str() << "\nrp " << (result.verdict ? "true" : "false")
                      << "\n";
            if (!result.verdict) {
                if (auto lambda = solver.first_failing_lambda(sig))
                    std::cout << "first_failing_lambda " << *lambda << "\n";
            } else if (!ss_cert.empty()) {
                write_file(ss_cert, serialize_signature_certificate(*result.certificate));
                std::cout << "certificate " << ss_cert << "\n";
            }
            return result.verdict ? 0 : 1;
        }
        if (*ss_minimal) {
            SemistarSolver solver;
            const auto result = enumerate_minimal_rp_semistars(solver, ss_b0, ss_k, ss_bound);
            for (const auto& s : result.minimal_signatures) std::cout << s.str() << "\n";
            std::cout << "count " << result.minimal_signatures.size() << "\n";
            std::cout << "exhaustive_below_bound " << (result.exhaustive_below_bound ? "true" : "false")
                      << "\n";
            return 0;
        }
        if (*ss_verify) {
            std::ifstream in(ssv_file);
            if (!in) throw std::runtime_error("cannot open '" + ssv_file + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            const auto parsed = parse_signature_certificate(buf.str());
            const auto result = verify_signature_certificate(SemistarSignature::parse(ssv_sig), *parsed);
            std::cout << "valid " << (result.valid ? "true" : "false") << "\n";
            if (!result.valid) std::cout << "reason " << result.failure_reason << "\n";
            return result.valid ? 0 : 1;
        }
        if (*metrics_cmd) return run_metrics(metrics_graph, false);
        if (*toughness_cmd) return run_metrics(toughness_graph, true);
        if (*modcut) {
            const Graph g = load_graph_arg(cond_graph);
            const auto violation = mod_cut_scan(g, cond_max_cut);
            if (violation) {
                std::cout << "violation S=" << violation->cut.str() << " k=" << violation->k << " w_k="
                          << violation->report.w_k.str() << " bound=" << violation->report.bound.str()
                          << "\nnot_ap certified (hence not RP)\n";
                return 0;
            }
            std::cout << "no violation within |S| <= " << cond_max_cut << "\n";
            return 1;
        }
        if (*spider) {
            const Graph g = load_graph_arg(spider_graph);
            const auto witness = spider_obstruction(g, cond_k, cond_max_cut);
            if (witness) {
                std::cout << "obstruction S=" << witness->str() << " c="
                          << g.components(*witness).size() << " (no spanning subdivision of K_{1,"
                          << cond_k << "})\n";
                return 0;
            }
            std::cout << "no obstruction within |S| <= " << cond_max_cut << "\n";
            return 1;
        }
        if (*treerp) {
            const auto verdict = tree_is_rp(load_graph_arg(treerp_graph));
            const char* reason = verdict.reason == TreeRpVerdict::Reason::path            ? "path"
                                 : verdict.reason == TreeRpVerdict::Reason::tripode_table ? "tripode_table"
                                 : verdict.reason == TreeRpVerdict::Reason::sporadic_246  ? "sporadic_246"
                                                                                          : "excluded";
            std::cout << "tree_rp " << (verdict.is_rp ? "true" : "false") << " reason " << reason << "\n";
            return verdict.is_rp ? 0 : 1;
        }
        if (*rpspan) {
            const auto result = has_rp_spanning_tree(load_graph_arg(rpspan_graph));
            std::cout << "rp_spanning_tree " << (result.exists ? "true" : "false") << "\n";
            if (result.tree) {
                std::ostringstream os;
                result.tree->write_edge_list(os);
                std::cout << os.str();
            }
            return result.exists ? 0 : 1;
        }
        if (*construct) {
            SemistarSolver signatures;
            RpSolver solver(budget_from_env());
            ConstructionResult built;
            // H(s,j) builds carry certificates and the designated cut.
            std::string_view expr = construct_expr;
            if (expr.size() > 2 && expr[0] == 'H' && expr.find('(') != std::string_view::npos &&
                expr.find("join") == std::string_view::npos) {
                const auto args = SemistarSignature::parse_entries("K0" + std::string(expr.substr(1)));
                if (args.second.size() != 2) throw parse_error("H takes (s,j)");
                built = build_corollary_family(args.second[0], args.second[1], signatures, solver);
            } else {
                built.graph = parse_graph_expr(construct_expr);
                built.provenance = construct_expr;
            }
            std::ostringstream os;
            built.graph.write_edge_list(os);
            if (construct_out.empty())
                std::cout << os.str();
            else
                write_file(construct_out, os.str());
            std::cout << "provenance " << built.provenance << "\n";
            if (built.designated_cut) {
                std::cout << "cut " << built.designated_cut->str() << " components "
                          << built.graph.components(*built.designated_cut).size() << "\n";
            }
            if (!construct_cert.empty()) {
                if (!built.certificate)
                    throw std::runtime_error("this construction carries no certificate");
                write_file(construct_cert, serialize_certificate(*built.certificate));
                std::cout << "certificate " << construct_cert << "\n";
            }
            return 0;
        }
        if (*cert_verify_cmd) {
            const Graph g = load_graph_arg(cv_graph);
            std::ifstream in(cv_file);
            if (!in) throw std::runtime_error("cannot open '" + cv_file + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            const auto parsed = parse_certificate(buf.str());
            const auto result = verify_certificate(g, *parsed);
            std::cout << "valid " << (result.valid ? "true" : "false") << " tier "
                      << (result.tier == CertTier::elementary ? "elementary" : "theorem_backed") << "\n";
            if (!result.valid) std::cout << "reason " << result.failure_reason << "\n";
            return result.valid ? 0 : 1;
        }
        if (*verify_paper) return run_verify_paper(vp_suite, vp_data);
        throw std::runtime_error("no subcommand selected");
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error";
        if (e.line > 0) std::cerr << " at line " << e.line << ", column " << e.column;
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
