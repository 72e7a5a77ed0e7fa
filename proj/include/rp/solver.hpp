#pragma once

#include "rp/certificates.hpp"
#include "rp/graph.hpp"
#include "rp/partitions.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace rp {

struct SolverBudget {
    int rp_max_n = 13;
    int ap_max_n = 11;
    std::size_t memo_cap = std::size_t{1} << 22;
};

struct RpResult {
    bool verdict = false;
    RpCertPtr certificate; // elementary tier, present iff verdict
};

// Exact RP decider by the bipartition characterisation, memoized on the
// induced-subgraph bit vector within the root graph. Traceable subgraphs
// short-circuit to path leaves before any split enumeration. An instance
// owns a private memo and is single-threaded by contract.
class RpSolver {
public:
    explicit RpSolver(SolverBudget budget = {}) : budget_(budget) {}

    // Disconnected graphs get verdict false (no error); n over budget throws.
    RpResult is_rp(const Graph& g);

    struct FirstFailing {
        std::optional<int> size; // smallest a in 1..n/2 with no RP (a, n-a) split
        bool disconnected = false;
    };
    FirstFailing first_failing_size(const Graph& g);

    const SolverBudget& budget() const { return budget_; }

private:
    struct Entry {
        bool rp = false;
        RpCertPtr cert;
        std::optional<int> failing_a;
    };
    void bind_root(const Graph& g);
    const Entry& solve(std::uint64_t mask);

    SolverBudget budget_;
    std::optional<Graph> root_;
    std::unordered_map<std::uint64_t, Entry> memo_;
};

struct ApResult {
    bool verdict = false;
    std::map<IntegerPartition, std::vector<VertexSet>> witnesses;
    std::optional<IntegerPartition> failing_partition;
};

// Exact AP decider: every integer partition of n must admit a realization
// into connected parts. Realization search assigns the anchor vertex's part
// first, trying the largest remaining sizes first, memoized on (remaining
// vertex set, remaining part multiset). ap_max_n is capped at 15 so the
// multiset packs into one machine word.
class ApSolver {
public:
    explicit ApSolver(SolverBudget budget = {});

    ApResult is_ap(const Graph& g, bool collect_witnesses = true);
    // Realization of one fixed partition; nullopt when impossible.
    std::optional<std::vector<VertexSet>> realize_partition(const Graph& g, const IntegerPartition& p);

    const SolverBudget& budget() const { return budget_; }

private:
    struct State {
        bool ok = false;
        std::uint64_t chosen = 0; // anchor part on the success path
    };
    void bind_root(const Graph& g);
    bool realize(std::uint64_t mask, std::vector<int>& parts_desc);
    static std::uint64_t key_of(std::uint64_t mask, const std::vector<int>& parts_desc);

    SolverBudget budget_;
    std::optional<Graph> root_;
    std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, State>> memo_; // mask -> partskey -> state
};

// Enumerates connected subsets of G[mask] that contain the lowest vertex of
// mask and have exactly target_size vertices. Deterministic order. The
// visitor returns false to stop; the function returns false if stopped.
bool for_each_anchored_connected_subset(const Graph& g, std::uint64_t mask, int target_size,
                                        const std::function<bool(std::uint64_t)>& visit);

} // namespace rp
