#include "rp/errors.hpp"
#include "rp/graph.hpp"
#include "rp/graph_algos.hpp"

#include "support/small_graphs.hpp"

#include <doctest.h>

#include <sstream>

using namespace rp;
namespace ts = rp::testsupport;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph clique(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star(int leaves) { // K_{1,leaves}, center 0
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph tripode112() { // T(1,1,2): center 0, legs {1}, {2}, {3,4}
    return Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
}

} // namespace

TEST_CASE("graph_from_edge_list basics") {
    const Graph k2 = Graph::from_edge_list(2, {{0, 1}});
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);

    const Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.edge_count() == 3);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);

    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);

    // Duplicate edges collapse.
    const Graph dup = Graph::from_edge_list(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("induced subgraphs relabel ascending") {
    const Graph p4 = path(4);
    const Graph a = p4.induced(VertexSet::of({0, 1}, 4));
    CHECK(a.order() == 2);
    CHECK(a.edge_count() == 1);

    const Graph b = p4.induced(VertexSet::of({0, 2}, 4));
    CHECK(b.order() == 2);
    CHECK(b.edge_count() == 0);

    const Graph c = clique(4).induced(VertexSet::of({1, 2, 3}, 4));
    CHECK(c == clique(3));

    CHECK_THROWS_AS(p4.induced(VertexSet{0, 4}), std::invalid_argument);
    CHECK(p4.induced(VertexSet::of({0, 1, 2, 3}, 4)) == p4);
}

TEST_CASE("components are ordered by minimum vertex") {
    const Graph p4 = path(4);
    auto comps = p4.components(VertexSet::of({1}, 4));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet::of({0}, 4));
    CHECK(comps[1] == VertexSet::of({2, 3}, 4));

    auto stars = star(3).components(VertexSet::of({0}, 4));
    CHECK(stars.size() == 3);
    for (const auto& s : stars) CHECK(s.size() == 1);

    auto whole = cycle(5).components(VertexSet{0, 5});
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].size() == 5);

    CHECK_THROWS_AS(p4.components(VertexSet::of({0, 1, 2, 3}, 4)), std::invalid_argument);
}

TEST_CASE("component partition property on random graphs") {
    ts::Rng rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + rng.below(9);
        const Graph g = ts::random_connected_graph(n, 35, rng);
        const std::uint64_t removed = rng.next() & (g.vertex_mask() >> 1); // keep at least one vertex
        auto comps = g.components(VertexSet{removed, n});
        std::uint64_t seen = 0;
        for (const auto& c : comps) {
            CHECK((seen & c.bits) == 0);
            seen |= c.bits;
        }
        CHECK(seen == (g.vertex_mask() & ~removed));
        CHECK(static_cast<int>(comps.size()) == ts::oracle_component_count(g, removed));
    }
}

TEST_CASE("connectivity") {
    CHECK(path(4).is_connected());
    CHECK_FALSE(Graph(2).is_connected());
    CHECK(Graph(1).is_connected());
}

TEST_CASE("traceability: frozen examples and witness validity") {
    CHECK(is_traceable(cycle(5)).traceable);
    CHECK_FALSE(is_traceable(star(3)).traceable);

    // T(1,1,2): exhaustive 5!-order search says no spanning path.
    CHECK_FALSE(ts::oracle_has_ham_path(tripode112()));
    CHECK_FALSE(is_traceable(tripode112()).traceable);

    auto tr = is_traceable(path(6));
    REQUIRE(tr.traceable);
    REQUIRE(tr.path.size() == 6);
    for (std::size_t i = 0; i + 1 < tr.path.size(); ++i)
        CHECK(path(6).has_edge(tr.path[i], tr.path[i + 1]));

    CHECK_THROWS_AS(is_traceable(path(25)), budget_error);
}

TEST_CASE("traceability agrees with the permutation oracle up to n=6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : ts::all_connected_graphs(n))
            CHECK(is_traceable(g).traceable == ts::oracle_has_ham_path(g));
}

TEST_CASE("hamiltonicity: frozen examples and implications") {
    CHECK(is_hamiltonian(cycle(5)));
    CHECK_FALSE(is_hamiltonian(path(4)));
    CHECK(is_hamiltonian(clique(4)));
    CHECK_FALSE(is_hamiltonian(path(2)));

    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : ts::all_connected_graphs(n)) {
            if (is_hamiltonian(g)) CHECK(is_traceable(g).traceable);
            if (is_traceable(g).traceable) CHECK(g.is_connected());
        }
}

TEST_CASE("matching status") {
    CHECK(matching_status(path(4)) == MatchingStatus::perfect);
    CHECK(matching_status(path(5)) == MatchingStatus::near_perfect);

    // K_{2,4}: brute-force maximum matching is 2 < 3.
    CHECK(ts::oracle_max_matching(complete_bipartite(2, 4)) == 2);
    CHECK(matching_status(complete_bipartite(2, 4)) == MatchingStatus::neither);

    for (int n = 1; n <= 12; ++n)
        CHECK(matching_status(path(n)) ==
              (n % 2 == 0 ? MatchingStatus::perfect : MatchingStatus::near_perfect));

    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : ts::all_graphs(n))
            CHECK(maximum_matching_size(g) == ts::oracle_max_matching(g));
}

TEST_CASE("metrics: frozen examples") {
    const auto star_metrics = metrics(star(3));
    REQUIRE(star_metrics.toughness.has_value());
    CHECK(*star_metrics.toughness == Rational{1, 3});
    CHECK(star_metrics.kappa == 1);

    CHECK(metrics(complete_bipartite(2, 4)).alpha == 4);

    // P_4: brute force over all 14 proper subsets gives toughness 1/2.
    CHECK(ts::oracle_toughness(path(4)) == std::pair<int, int>{1, 2});
    const auto p4_metrics = metrics(path(4));
    REQUIRE(p4_metrics.toughness.has_value());
    CHECK(*p4_metrics.toughness == Rational{1, 2});

    // The reported value is achieved by the returned witness set.
    const auto t = toughness(path(4));
    REQUIRE(t.value.has_value());
    const int c = path(4).component_count_within(path(4).vertex_mask() & ~t.witness.bits);
    CHECK(Rational{t.witness.size(), c} == *t.value);
    CHECK(c == t.witness_components);

    // Complete graphs have no cut: toughness and sigma and kappa absent.
    const auto k4_metrics = metrics(clique(4));
    CHECK_FALSE(k4_metrics.toughness.has_value());
    CHECK(k4_metrics.toughness_status == AbsenceReason::complete_graph);
    CHECK_FALSE(k4_metrics.sigma.has_value());
    CHECK_FALSE(k4_metrics.kappa.has_value());
}

TEST_CASE("metrics agree with oracles on random graphs") {
    ts::Rng rng(999);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + rng.below(7);
        const Graph g = ts::random_connected_graph(n, 40, rng);
        CHECK(independence_number(g) == ts::oracle_independence(g));
        const auto t = toughness(g);
        const auto [on, od] = ts::oracle_toughness(g);
        if (od == 0) {
            CHECK_FALSE(t.value.has_value());
        } else {
            REQUIRE(t.value.has_value());
            CHECK(*t.value == Rational{on, od});
        }
    }
}

TEST_CASE("vertex connectivity via disjoint paths") {
    CHECK(vertex_connectivity(star(3)) == 1);
    CHECK(vertex_connectivity(cycle(5)) == 2);
    CHECK(vertex_connectivity(complete_bipartite(2, 4)) == 2);
    CHECK(vertex_connectivity(complete_bipartite(3, 3)) == 3);
    CHECK_FALSE(vertex_connectivity(clique(5)).has_value());
    CHECK(vertex_connectivity(Graph(3)) == 0);

    // kappa == minimum size of a disconnecting set, cross-checked by scan.
    ts::Rng rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + rng.below(5);
        const Graph g = ts::random_connected_graph(n, 50, rng);
        if (g.is_complete()) continue;
        int brute = n;
        for (std::uint64_t s = 0; s < g.vertex_mask(); ++s)
            if (ts::oracle_component_count(g, s) >= 2)
                brute = std::min(brute, static_cast<int>(std::popcount(s)));
        CHECK(vertex_connectivity(g) == brute);
    }
}

TEST_CASE("sigma and the Ore checks") {
    // K_{2,3}: n=5, sigma=4 >= n-1 -> traceable flag; not >= n.
    const auto k23 = sigma_ore_checks(complete_bipartite(2, 3));
    CHECK(k23.implies_traceable);
    CHECK_FALSE(k23.implies_hamiltonian);

    const auto p4 = sigma_ore_checks(path(4)); // sigma = 2 < 3
    CHECK_FALSE(p4.implies_traceable);
    CHECK_FALSE(p4.implies_hamiltonian);

    const auto c4 = sigma_ore_checks(cycle(4)); // sigma = 4 = n
    CHECK(c4.implies_traceable);
    CHECK(c4.implies_hamiltonian);

    CHECK_THROWS_AS(sigma_ore_checks(clique(3)), std::invalid_argument);
}

TEST_CASE("Ore conditions validated against the DP") {
    // Exhaustive for n <= 7, randomized for n = 8, 9.
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : ts::all_connected_graphs(n)) {
            if (g.is_complete()) continue;
            const auto ore = sigma_ore_checks(g);
            if (ore.implies_traceable) CHECK(is_traceable(g).traceable);
            if (ore.implies_hamiltonian) CHECK(is_hamiltonian(g));
        }
    ts::Rng rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 8 + trial % 2;
        const Graph g = ts::random_connected_graph(n, 55, rng);
        if (g.is_complete()) continue;
        const auto ore = sigma_ore_checks(g);
        if (ore.implies_traceable) CHECK(is_traceable(g).traceable);
        if (ore.implies_hamiltonian) CHECK(is_hamiltonian(g));
    }
}

TEST_CASE("edge list text format round trip") {
    const Graph g = tripode112();
    std::stringstream ss;
    g.write_edge_list(ss);
    const Graph back = Graph::read_edge_list(ss);
    CHECK(back == g);

    std::stringstream commented("# a tripode\nn 3\n0 1 # leg\n1 2\n");
    CHECK(Graph::read_edge_list(commented) == path(3));

    std::stringstream bad("3\n0 1\n");
    CHECK_THROWS_AS(Graph::read_edge_list(bad), parse_error);
    std::stringstream loop("n 3\n1 1\n");
    CHECK_THROWS_AS(Graph::read_edge_list(loop), parse_error);
}

TEST_CASE("iso-class corpus sizes match the literature counts") {
    CHECK(ts::all_graphs(4).size() == 11);
    CHECK(ts::all_graphs(5).size() == 34);
    CHECK(ts::all_graphs(6).size() == 156);
    CHECK(ts::all_connected_graphs(4).size() == 6);
    CHECK(ts::all_connected_graphs(5).size() == 21);
    CHECK(ts::all_connected_graphs(6).size() == 112);
}
