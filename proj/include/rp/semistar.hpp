#pragma once

#include "rp/graph.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rp {

// Semistar K_{b0}(b1,...,bk): a center clique K_{b0} fully joined to the
// disjoint union of leaf cliques K_{b1},...,K_{bk}. Canonical form keeps
// leaves sorted ascending with zero entries stripped, so isomorphic
// signatures compare equal.
class SemistarSignature {
public:
    SemistarSignature() = default; // K_0(), order 0; only valid as a map key placeholder
    SemistarSignature(int center, std::vector<int> leaves);

    int center() const { return center_; }
    const std::vector<int>& leaves() const { return leaves_; }
    int leaf_count() const { return static_cast<int>(leaves_.size()); }
    int order() const;
    bool connected() const { return center_ >= 1 || leaves_.size() <= 1; }
    // K_{b0}(b1) is the complete graph K_{b0+b1}; a signature is one clique
    // iff at most one leaf entry survives canonicalization.
    bool single_clique() const { return leaves_.size() <= 1; }

    std::string str() const; // "K2(1,1,2,6)", canonical, whitespace-free
    // Accepts unsorted and zero entries, e.g. "K1(0,6,0,2)" -> K1(2,6).
    static SemistarSignature parse(std::string_view text);
    // Raw variant preserving entry order and zeros: ("K1(0,6,0,2)") ->
    // {1, {0,6,0,2}}. Used where positional (pre-canonical) alignment matters.
    static std::pair<int, std::vector<int>> parse_entries(std::string_view text);

    auto operator<=>(const SemistarSignature&) const = default;

private:
    int center_ = 0;
    std::vector<int> leaves_;
};

// Concrete graph: center clique first (vertices 0..b0-1), then the leaf
// cliques in canonical order. Throws budget_error over 64 vertices.
Graph realize(const SemistarSignature& sig);

// One bipartition row of a signature certificate: part A takes x_center
// vertices from the center clique and x_leaves[i] from the i-th canonical
// leaf; part B takes the entrywise complement.
struct SigSplitEntry {
    int lambda = 0;
    int x_center = 0;
    std::vector<int> x_leaves;
};

// Machine-checkable RP witness for a signature. Stored as a table keyed by
// canonical signature (a DAG, not an expanded tree: subtrees repeat heavily
// and the expanded form grows exponentially with the order). A node is
// either a single clique or a split list covering lambda = 1..floor(n/2);
// split children are looked up in the same table.
struct SignatureCertificate {
    struct Node {
        bool clique = false;
        std::vector<SigSplitEntry> entries; // split nodes only
    };
    SemistarSignature root;
    std::map<SemistarSignature, Node> nodes;
};

struct SigVerifyResult {
    bool valid = false;
    std::string failure_reason;
};

// First-principles arithmetic check: no solver involved. Every table node is
// validated locally (coverage, vector sums, child presence); children have
// strictly smaller order, so local validity of all nodes proves the root RP.
SigVerifyResult verify_signature_certificate(const SemistarSignature& sig,
                                             const SignatureCertificate& cert);

struct SigRpResult {
    bool verdict = false;
    std::shared_ptr<const SignatureCertificate> certificate; // present iff verdict
};

// Exact RP decision over signatures by recursion on integer vectors,
// memoized on canonical form. A solver instance owns a private memo and is
// single-threaded; distinct instances may run concurrently.
class SemistarSolver {
public:
    bool is_rp(const SemistarSignature& sig);
    SigRpResult is_rp_certified(const SemistarSignature& sig);
    // Smallest lambda admitting no split into two RP parts; nullopt if RP.
    std::optional<int> first_failing_lambda(const SemistarSignature& sig);

    std::size_t memo_size() const { return memo_.size(); }

private:
    struct Entry {
        bool rp = false;
        std::vector<SigSplitEntry> splits;   // per lambda, when rp
        std::optional<int> failing_lambda;   // when !rp and connected
    };
    const Entry& solve(const SemistarSignature& sig);
    std::map<SemistarSignature, Entry> memo_;
};

struct MinimalSetResult {
    int b0 = 0;
    int k = 0;
    int bound = 0;
    std::vector<SemistarSignature> minimal_signatures;
    // True when the search provably found every minimal (b0,k) RP semistar,
    // not just those inside the bounded box; see docs/semistar-search.md.
    bool exhaustive_below_bound = false;
};

// Enumerates sorted positive k-vectors with entries <= bound in ascending
// total-order (a dominance-compatible order), skipping dominated supersets
// of already-found minimal elements.
MinimalSetResult enumerate_minimal_rp_semistars(SemistarSolver& solver, int b0, int k, int bound);

struct MinimalityResult {
    bool is_minimal = false;
    std::optional<SemistarSignature> witness; // dominated RP signature when not minimal
};

// Exhaustively tests every entrywise-dominated positive signature with the
// same b0 and k. Requires sig RP with all leaf entries positive.
MinimalityResult check_minimality(SemistarSolver& solver, const SemistarSignature& sig);

} // namespace rp
