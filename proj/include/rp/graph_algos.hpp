#pragma once

#include "rp/graph.hpp"
#include "rp/rational.hpp"

#include <optional>
#include <vector>

namespace rp {

// Subset-DP budget for exact Hamiltonian path/cycle search.
inline constexpr int hamiltonian_budget_n = 24;

struct TraceabilityResult {
    bool traceable = false;
    std::vector<int> path; // witness ordering when traceable
};

// Exact spanning-path test, O(2^n * n) subset DP. Throws budget_error for
// n > hamiltonian_budget_n.
TraceabilityResult is_traceable(const Graph& g);
bool is_hamiltonian(const Graph& g);

// Spanning path of G[mask] (vertices are labels of g). nullopt if none.
// popcount(mask) must be within the DP budget.
std::optional<std::vector<int>> hamiltonian_path_within(const Graph& g, std::uint64_t mask);

enum class MatchingStatus { perfect, near_perfect, neither };

int maximum_matching_size(const Graph& g);
MatchingStatus matching_status(const Graph& g);

int independence_number(const Graph& g);
// nullopt iff g is complete.
std::optional<int> min_degree_sum_nonadjacent(const Graph& g);
// Minimum size of a vertex set whose removal disconnects g; nullopt iff complete.
std::optional<int> vertex_connectivity(const Graph& g);

// Why a report field is absent.
enum class AbsenceReason { present, complete_graph, disconnected, over_budget };

// Exhaustive toughness scan budget (2^n subsets).
inline constexpr int toughness_budget_n = 26;

struct ToughnessResult {
    std::optional<Rational> value;
    VertexSet witness;              // minimizer S, meaningful when value present
    int witness_components = 0;     // c(G - S) for the witness
    AbsenceReason status = AbsenceReason::present;
};

// min |S| / c(G-S) over all S with c(G-S) >= 2, by exhaustive subset scan.
// Absent (with reason) for complete graphs, disconnected graphs, and orders
// beyond toughness_budget_n.
ToughnessResult toughness(const Graph& g);

struct MetricsReport {
    int alpha = 0;
    std::optional<int> sigma;
    std::optional<int> kappa;
    std::optional<Rational> toughness;
    VertexSet toughness_witness;
    AbsenceReason toughness_status = AbsenceReason::present;
};

MetricsReport metrics(const Graph& g);

struct OreChecks {
    bool implies_traceable = false;   // sigma >= n-1
    bool implies_hamiltonian = false; // sigma >= n
};

// Throws std::invalid_argument on complete graphs (sigma undefined).
OreChecks sigma_ore_checks(const Graph& g);

} // namespace rp
