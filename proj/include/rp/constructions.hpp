#pragma once

#include "rp/certificates.hpp"
#include "rp/graph.hpp"
#include "rp/semistar.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rp {

class RpSolver;

// A built graph plus, when the build was theorem-backed, an RP certificate
// and (for the corollary family) the designated cut.
struct ConstructionResult {
    Graph graph;
    RpCertPtr certificate;
    std::string provenance;
    std::optional<VertexSet> designated_cut;
};

Graph build_path(int n);
Graph build_cycle(int n);
Graph build_clique(int n);
Graph build_empty(int n);
Graph build_complete_multipartite(const std::vector<int>& part_sizes);

// Tree with one degree-3 vertex (label 0) whose removal leaves paths of
// orders a, b, c. Legs are labeled consecutively, each starting at the
// vertex adjacent to the center.
Graph build_tripode(int a, int b, int c);

// k internally disjoint paths between the non-adjacent ends u (label 0) and
// v (label 1); path i has legs[i] >= 1 vertices, labeled consecutively from
// the u side. Zero-length legs are rejected.
Graph build_balloon(const std::vector<int>& legs);

// Clique with a path-leaf certificate.
ConstructionResult clique_construction(int n);

// Disjoint union of the parts plus all edges between consecutive blocks,
// blocks labeled consecutively in order. If every part carries a valid RP
// certificate the result carries a join certificate.
ConstructionResult sequential_join(const std::vector<ConstructionResult>& parts);

// Replacement graph for the (pre-canonical, positional) template
// K_{template_center}(template_leaves): component i replaces the i-th clique
// and must be RP-certified with matching order. All template entries must be
// positive. The template is checked RP with the signature solver.
ConstructionResult build_replacement(int template_center, const std::vector<int>& template_leaves,
                                     const std::vector<ConstructionResult>& components,
                                     SemistarSolver& signatures);

// H_1(j) = T(1,1,2j); H_2(j) = K_2(1,1,2,6,j);
// H_{s+2}(j) = K_2 + (K_1 u K_1 u K_2 u K_6 u H_s(j)).
// Carries a theorem-backed certificate chain and the designated cut of size
// s leaving 2s+1 components. Odd s needs the generic solver for the tripode
// base case, so 2j+3 must fit its budget.
ConstructionResult build_corollary_family(int s, int j, SemistarSolver& signatures, RpSolver& solver);

// Family grammar shared with the CLI:
//   T(a,b,c)  B(b1,...,bk)  K<b0>(b1,...,bk)  KM(p1,...,pt)
//   P<n>  C<n>  Kn<n>  H(s,j)  join(expr,expr,...)
Graph parse_graph_expr(std::string_view text);

} // namespace rp
