#include "rp/certificates.hpp"
#include "rp/constructions.hpp"
#include "rp/errors.hpp"
#include "rp/graph_algos.hpp"
#include "rp/semistar.hpp"
#include "rp/solver.hpp"

#include "support/small_graphs.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rp;
namespace ts = rp::testsupport;

TEST_CASE("tripode builder") {
    const Graph t = build_tripode(1, 2, 3);
    CHECK(t.order() == 7);
    CHECK(t.edge_count() == 6);
    int degree3 = 0;
    for (int v = 0; v < t.order(); ++v) {
        CHECK(t.degree(v) <= 3);
        if (t.degree(v) == 3) ++degree3;
    }
    CHECK(degree3 == 1);
    CHECK(t.degree(0) == 3); // center label convention

    CHECK(ts::canonical_code(build_tripode(1, 1, 1)) ==
          ts::canonical_code(build_complete_multipartite({1, 3})));
    CHECK_THROWS_AS(build_tripode(0, 1, 1), construction_error);
    CHECK_THROWS_AS(build_tripode(30, 30, 30), construction_error);
}

TEST_CASE("balloon builder") {
    const Graph b = build_balloon({1, 1, 2, 2, 3});
    CHECK(b.order() == 11);
    CHECK_FALSE(b.has_edge(0, 1)); // u, v stay non-adjacent
    CHECK(b.degree(0) == 5);
    CHECK(b.degree(1) == 5);

    CHECK(ts::canonical_code(build_balloon({1})) == ts::canonical_code(build_path(3)));
    CHECK_THROWS_AS(build_balloon({0}), construction_error);
    CHECK_THROWS_AS(build_balloon({}), construction_error);
}

TEST_CASE("sequential join: order, edges, certificates") {
    const auto k2 = sequential_join({clique_construction(1), clique_construction(1)});
    CHECK(k2.graph == build_clique(2));
    REQUIRE(k2.certificate);
    CHECK(verify_certificate(k2.graph, *k2.certificate).valid);
    CHECK(verify_certificate(k2.graph, *k2.certificate).tier == CertTier::theorem_backed);

    // Order and edge count: sum of parts plus consecutive order products.
    ts::Rng rng(606);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ConstructionResult> parts;
        int total = 0, edges = 0, prev = 0;
        const int count = 2 + rng.below(3);
        for (int i = 0; i < count; ++i) {
            const int n = 1 + rng.below(4);
            ConstructionResult part;
            part.graph = ts::random_connected_graph(n, 50, rng);
            edges += part.graph.edge_count() + prev * n;
            total += n;
            prev = n;
            parts.push_back(std::move(part));
        }
        const auto joined = sequential_join(parts);
        CHECK(joined.graph.order() == total);
        CHECK(joined.graph.edge_count() == edges);
        CHECK_FALSE(joined.certificate); // no input certificates
    }

    // K_1 + G is a suspension: minimum degree grows by one plus delta(G).
    const Graph g = parse_graph_expr("P4");
    ConstructionResult left = clique_construction(1), right;
    right.graph = g;
    const auto suspension = sequential_join({left, right});
    CHECK(suspension.graph.order() == 5);
    CHECK(suspension.graph.degree(0) == 4);

    // Invalid input certificate is rejected.
    ConstructionResult bogus;
    bogus.graph = parse_graph_expr("P3");
    bogus.certificate = RpCertificate::make_path({0, 2, 1}); // 0-2 not an edge of P3
    CHECK_THROWS_AS(sequential_join({bogus}), construction_error);
}

TEST_CASE("join of two tripodes has no spanning tripode but is RP") {
    RpSolver solver;
    ConstructionResult t1, t2;
    t1.graph = parse_graph_expr("T(1,1,2)");
    t2.graph = parse_graph_expr("T(1,1,2)");
    const auto joined = sequential_join({t1, clique_construction(1), t2});
    CHECK(joined.graph.order() == 11);
    CHECK(solver.is_rp(joined.graph).verdict);
}

TEST_CASE("replacement builder") {
    SemistarSolver signatures;

    // All-clique components reproduce the realized semistar exactly (the
    // given entry list is already canonical).
    {
        std::vector<ConstructionResult> comps{clique_construction(2)};
        for (int b : {1, 1, 2, 6, 9}) comps.push_back(clique_construction(b));
        const auto r = build_replacement(2, {1, 1, 2, 6, 9}, comps, signatures);
        CHECK(r.graph == realize(SemistarSignature(2, {1, 1, 2, 6, 9})));
        REQUIRE(r.certificate);
        CHECK(verify_certificate(r.graph, *r.certificate).valid);
    }

    // Template K1(1,1,2) with clique components: the output is the realized
    // semistar, which T(1,1,2) spans; the certificate is theorem-backed.
    {
        std::vector<ConstructionResult> comps{clique_construction(1), clique_construction(1),
                                              clique_construction(1), clique_construction(2)};
        const auto r = build_replacement(1, {1, 1, 2}, comps, signatures);
        CHECK(r.graph == realize(SemistarSignature(1, {1, 1, 2})));
        REQUIRE(r.certificate);
        const auto check = verify_certificate(r.graph, *r.certificate);
        CHECK(check.valid);
        CHECK(check.tier == CertTier::theorem_backed);
    }

    // Order mismatch, missing certificate, non-RP template.
    {
        std::vector<ConstructionResult> comps{clique_construction(1), clique_construction(1),
                                              clique_construction(1), clique_construction(3)};
        CHECK_THROWS_AS(build_replacement(1, {1, 1, 2}, comps, signatures), construction_error);
    }
    {
        ConstructionResult uncertified;
        uncertified.graph = build_clique(2);
        std::vector<ConstructionResult> comps{clique_construction(1), clique_construction(1),
                                              clique_construction(1), uncertified};
        CHECK_THROWS_AS(build_replacement(1, {1, 1, 2}, comps, signatures), construction_error);
    }
    {
        std::vector<ConstructionResult> comps{clique_construction(1)};
        for (int i = 0; i < 4; ++i) comps.push_back(clique_construction(1));
        CHECK_THROWS_AS(build_replacement(1, {1, 1, 1, 1}, comps, signatures), construction_error);
    }
}

TEST_CASE("replacement with clique components matches realize() for small templates") {
    SemistarSolver signatures;
    RpSolver solver;
    ts::Rng rng(7777);
    int tested = 0;
    for (int trial = 0; trial < 60 && tested < 12; ++trial) {
        const int b0 = 1 + rng.below(2);
        std::vector<int> leaves;
        for (int i = 0, k = 2 + rng.below(3); i < k; ++i) leaves.push_back(1 + rng.below(3));
        SemistarSignature s(b0, leaves);
        if (s.order() > 12 || !signatures.is_rp(s)) continue;
        std::vector<ConstructionResult> comps{clique_construction(b0)};
        for (int b : leaves) comps.push_back(clique_construction(b));
        const auto r = build_replacement(b0, leaves, comps, signatures);
        const Graph direct = realize(s);
        // Same degree sequence and the same solver verdict.
        auto degrees = [](const Graph& g) {
            std::vector<int> d;
            for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
            std::sort(d.begin(), d.end());
            return d;
        };
        CHECK(degrees(r.graph) == degrees(direct));
        CHECK(solver.is_rp(r.graph).verdict == solver.is_rp(direct).verdict);
        ++tested;
    }
    CHECK(tested > 0);
}

TEST_CASE("corollary family H_s(j)") {
    SemistarSolver signatures;
    RpSolver solver;

    const auto h12 = build_corollary_family(1, 2, signatures, solver);
    CHECK(h12.graph == build_tripode(1, 1, 4));
    REQUIRE(h12.designated_cut);
    CHECK(h12.designated_cut->size() == 1);

    const auto h21 = build_corollary_family(2, 1, signatures, solver);
    CHECK(h21.graph == realize(SemistarSignature(2, {1, 1, 2, 6, 1})));
    REQUIRE(h21.designated_cut);
    CHECK(h21.designated_cut->size() == 2);
    CHECK(h21.graph.components(*h21.designated_cut).size() == 5);

    const auto h31 = build_corollary_family(3, 1, signatures, solver);
    CHECK(h31.graph.order() == 17);
    REQUIRE(h31.designated_cut);
    CHECK(h31.designated_cut->size() == 3);
    CHECK(h31.graph.components(*h31.designated_cut).size() == 7);
    REQUIRE(h31.certificate);
    const auto check = verify_certificate(h31.graph, *h31.certificate);
    CHECK(check.valid);
    CHECK(check.tier == CertTier::theorem_backed);
}

TEST_CASE("complete multipartite builder") {
    CHECK(build_complete_multipartite({2, 4}).edge_count() == 8);
    CHECK(build_complete_multipartite({1, 1, 1}) == build_clique(3));
    CHECK(independence_number(build_complete_multipartite({3, 3})) == 3);
}

TEST_CASE("graph expression grammar") {
    CHECK(parse_graph_expr("P6").order() == 6);
    CHECK(parse_graph_expr("C5").edge_count() == 5);
    CHECK(parse_graph_expr("Kn4") == build_clique(4));
    CHECK(parse_graph_expr("KM(2,4)") == build_complete_multipartite({2, 4}));
    CHECK(parse_graph_expr("T(1,1,2)") == build_tripode(1, 1, 2));
    CHECK(parse_graph_expr("B(1,1,2)") == build_balloon({1, 1, 2}));
    CHECK(parse_graph_expr("K2(1,1,2,6,3)") == realize(SemistarSignature(2, {1, 1, 2, 6, 3})));
    CHECK(parse_graph_expr("H(1,1)") == build_tripode(1, 1, 2));
    CHECK(parse_graph_expr(" join( T(1,1,2), Kn1, T(1,1,2) ) ").order() == 11);

    CHECK_THROWS_AS(parse_graph_expr("Q5"), parse_error);
    CHECK_THROWS_AS(parse_graph_expr("T(1,2)"), parse_error);
    CHECK_THROWS_AS(parse_graph_expr("P6x"), parse_error);
    try {
        parse_graph_expr("T(1,2)");
    } catch (const parse_error& e) {
        CHECK(e.column > 0);
    }
}
