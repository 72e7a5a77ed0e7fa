#pragma once

#include "rp/graph.hpp"
#include "rp/rational.hpp"

#include <array>
#include <optional>
#include <utility>

namespace rp {

// Closed-form RP decision for trees: paths, the sporadic tripode T(2,4,6),
// and the (1,b,c) tripode table.
struct TreeRpVerdict {
    bool is_rp = false;
    enum class Reason { path, tripode_table, sporadic_246, excluded } reason = Reason::excluded;
    std::optional<std::array<int, 3>> triple; // sorted legs when the tree is a tripode
};

// Throws std::invalid_argument when g is not a tree.
TreeRpVerdict tree_is_rp(const Graph& g);

// True iff T(a,b,c) (equivalently K_1(a,b,c)) is RP: sorted triple is
// (2,4,6) or a row of the tripode table.
bool rp_triple(int a, int b, int c);

struct ModCutReport {
    int k = 0;
    VertexSet cut;
    Rational w_k;
    Rational bound; // |S| + |V(G)|_k / (k-1)
    bool satisfied = false;
};

// Evaluates the mod-k cut inequality for one cut set. A violated report
// certifies that g is not AP (hence not RP).
ModCutReport mod_cut_check(const Graph& g, const VertexSet& S, int k);

struct ModCutViolation {
    VertexSet cut;
    int k = 0;
    ModCutReport report;
};

// First violating (S, k) with |S| <= max_cut and 2 <= k <= n, ordered by
// k ascending, then |S|, then the cut's bit pattern. Budget: n <= 20 or
// max_cut <= 4.
std::optional<ModCutViolation> mod_cut_scan(const Graph& g, int max_cut);

inline constexpr int cut_scan_budget_n = 20;

struct ToughnessBoundResult {
    bool consistent = true;
    std::optional<std::pair<VertexSet, int>> witness; // (S, c(G-S)) breaking the bound
};

// Scans every cut of an allegedly RP graph for c(G-S) >= 3|S| (|S| >= 2) or
// c >= 4 at |S| = 1. Budget n <= 20; the bounded variant caps |S| instead.
ToughnessBoundResult toughness_bound_check(const Graph& g, bool rp_claimed);
ToughnessBoundResult toughness_bound_check_bounded(const Graph& g, bool rp_claimed, int max_cut);

struct CutComponentsMax {
    int components = 0;
    VertexSet cut;
};

// Maximum c(G-S) over all S with |S| = cut_size (first maximizer).
CutComponentsMax max_components_at_cut_size(const Graph& g, int cut_size);

// Some S with c(G-S) >= |S| + k, certifying that g has no spanning
// subdivision of K_{1,k}; absent if none within |S| <= max_cut.
std::optional<VertexSet> spider_obstruction(const Graph& g, int k, int max_cut);

struct RpSpanningTreeResult {
    bool exists = false;
    std::optional<Graph> tree;
};

inline constexpr int spanning_tree_budget_n = 12;

// Spanning-tree enumeration (include/exclude on edges) with an early cutoff
// once an RP tree is found; traceable graphs short-circuit to their spanning
// path. Budget n <= 12.
RpSpanningTreeResult has_rp_spanning_tree(const Graph& g);

} // namespace rp
