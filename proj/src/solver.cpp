#include "rp/solver.hpp"

#include "rp/errors.hpp"
#include "rp/graph_algos.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace rp {

namespace {

bool anchored_rec(const Graph& g, std::uint64_t mask, int target, std::uint64_t cur,
                  std::uint64_t frontier, std::uint64_t banned,
                  const std::function<bool(std::uint64_t)>& visit) {
    if (std::popcount(cur) == target) return visit(cur);
    if (!frontier) return true;
    if (std::popcount(mask & ~banned) < target) return true; // banned never re-enters
    const std::uint64_t vbit = frontier & (~frontier + 1);
    const int v = std::countr_zero(vbit);
    // Include v, expanding the frontier by its unseen neighbours.
    const std::uint64_t ncur = cur | vbit;
    const std::uint64_t nfrontier = (frontier | (g.neighbors(v) & mask & ~banned)) & ~ncur;
    if (!anchored_rec(g, mask, target, ncur, nfrontier, banned, visit)) return false;
    // Exclude v permanently.
    return anchored_rec(g, mask, target, cur, frontier & ~vbit, banned | vbit, visit);
}

} // namespace

bool for_each_anchored_connected_subset(const Graph& g, std::uint64_t mask, int target_size,
                                        const std::function<bool(std::uint64_t)>& visit) {
    if (!mask || target_size < 1 || target_size > std::popcount(mask)) return true;
    const std::uint64_t anchor = mask & (~mask + 1);
    const int v = std::countr_zero(anchor);
    return anchored_rec(g, mask, target_size, anchor, g.neighbors(v) & mask & ~anchor, 0, visit);
}

void RpSolver::bind_root(const Graph& g) {
    if (!root_ || !(*root_ == g)) {
        root_ = g;
        memo_.clear();
    }
}

const RpSolver::Entry& RpSolver::solve(std::uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    if (memo_.size() >= budget_.memo_cap) throw budget_error("RP solver memo cap exceeded");

    const Graph& g = *root_;
    Entry entry;
    const int k = std::popcount(mask);
    if (!g.connected_within(mask)) {
        entry.rp = false;
    } else if (k == 1) {
        entry.rp = true;
        entry.cert = RpCertificate::make_singleton(std::countr_zero(mask));
    } else if (auto path = hamiltonian_path_within(g, mask)) {
        entry.rp = true;
        entry.cert = RpCertificate::make_path(std::move(*path));
    } else {
        entry.rp = true;
        std::vector<RpSplitEntry> entries;
        for (int a = 1; a <= k / 2 && entry.rp; ++a) {
            bool found = false;
            RpSplitEntry row;
            // The side containing the anchor vertex has size a or k-a;
            // enumerating anchored subsets of both sizes covers every
            // bipartition exactly once (one pass when a == k-a).
            const int sides[2] = {a, k - a};
            const int nsides = (a == k - a) ? 1 : 2;
            for (int si = 0; si < nsides && !found; ++si) {
                const int side = sides[si];
                for_each_anchored_connected_subset(g, mask, side, [&](std::uint64_t c) {
                    const std::uint64_t rest = mask & ~c;
                    if (!rest || !g.connected_within(rest)) return true;
                    const Entry& ec = solve(c);
                    if (!ec.rp) return true;
                    const Entry& er = solve(rest);
                    if (!er.rp) return true;
                    const std::uint64_t part_a = (side == a) ? c : rest;
                    row.size_a = a;
                    row.part_a = part_a;
                    row.cert_a = (side == a) ? ec.cert : er.cert;
                    row.cert_b = (side == a) ? er.cert : ec.cert;
                    found = true;
                    return false;
                });
            }
            if (found) {
                entries.push_back(std::move(row));
            } else {
                entry.rp = false;
                entry.failing_a = a;
            }
        }
        if (entry.rp) entry.cert = RpCertificate::make_split(mask, std::move(entries));
    }
    return memo_.emplace(mask, std::move(entry)).first->second;
}

RpResult RpSolver::is_rp(const Graph& g) {
    if (g.order() > budget_.rp_max_n)
        throw budget_error("RP solver budget is n <= " + std::to_string(budget_.rp_max_n) + ", got " +
                           std::to_string(g.order()));
    if (!g.is_connected()) return {false, nullptr};
    bind_root(g);
    const Entry& e = solve(g.vertex_mask());
    return {e.rp, e.cert};
}

RpSolver::FirstFailing RpSolver::first_failing_size(const Graph& g) {
    if (g.order() > budget_.rp_max_n)
        throw budget_error("RP solver budget is n <= " + std::to_string(budget_.rp_max_n) + ", got " +
                           std::to_string(g.order()));
    if (!g.is_connected()) return {std::nullopt, true};
    bind_root(g);
    const Entry& e = solve(g.vertex_mask());
    return {e.failing_a, false};
}

ApSolver::ApSolver(SolverBudget budget) : budget_(budget) {
    if (budget_.ap_max_n > 15)
        throw std::invalid_argument("AP budget capped at n <= 15 (part multiset packs in 4-bit fields)");
}

void ApSolver::bind_root(const Graph& g) {
    if (!root_ || !(*root_ == g)) {
        root_ = g;
        memo_.clear();
    }
}

std::uint64_t ApSolver::key_of(std::uint64_t /*mask*/, const std::vector<int>& parts_desc) {
    std::uint64_t key = 0;
    for (int p : parts_desc) key = (key << 4) | static_cast<std::uint64_t>(p);
    return key;
}

bool ApSolver::realize(std::uint64_t mask, std::vector<int>& parts_desc) {
    if (parts_desc.empty()) return mask == 0;
    if (memo_.size() >= budget_.memo_cap) throw budget_error("AP solver memo cap exceeded");
    const Graph& g = *root_;
    auto& per_mask = memo_[mask];
    const std::uint64_t pkey = key_of(mask, parts_desc);
    if (auto it = per_mask.find(pkey); it != per_mask.end()) return it->second.ok;

    bool ok = false;
    std::uint64_t chosen = 0;
    int last_size = -1;
    // The anchor vertex must land in some part; try the remaining sizes
    // largest first, skipping repeats.
    for (std::size_t i = 0; i < parts_desc.size() && !ok; ++i) {
        const int s = parts_desc[static_cast<std::size_t>(i)];
        if (s == last_size) continue;
        last_size = s;
        std::vector<int> rest;
        rest.reserve(parts_desc.size() - 1);
        for (std::size_t j = 0; j < parts_desc.size(); ++j)
            if (j != i) rest.push_back(parts_desc[j]);
        for_each_anchored_connected_subset(g, mask, s, [&](std::uint64_t c) {
            if (realize(mask & ~c, rest)) {
                ok = true;
                chosen = c;
                return false;
            }
            return true;
        });
    }
    memo_[mask][pkey] = State{ok, chosen};
    return ok;
}

std::optional<std::vector<VertexSet>> ApSolver::realize_partition(const Graph& g, const IntegerPartition& p) {
    if (g.order() > budget_.ap_max_n)
        throw budget_error("AP solver budget is n <= " + std::to_string(budget_.ap_max_n) + ", got " +
                           std::to_string(g.order()));
    if (p.total() != g.order()) throw std::invalid_argument("partition total differs from graph order");
    for (int part : p.parts)
        if (part < 1) throw std::invalid_argument("partition parts must be positive");
    bind_root(g);

    std::vector<int> desc(p.parts.rbegin(), p.parts.rend());
    if (!realize(g.vertex_mask(), desc)) return std::nullopt;

    // Walk the memoized success path to collect the chosen parts.
    std::vector<VertexSet> out;
    std::uint64_t mask = g.vertex_mask();
    std::vector<int> parts = desc;
    while (!parts.empty()) {
        const State& st = memo_[mask][key_of(mask, parts)];
        const int size = std::popcount(st.chosen);
        out.push_back(VertexSet{st.chosen, g.order()});
        mask &= ~st.chosen;
        auto it = std::find(parts.begin(), parts.end(), size);
        parts.erase(it);
    }
    // Align with the nondecreasing parts list.
    std::stable_sort(out.begin(), out.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    return out;
}

ApResult ApSolver::is_ap(const Graph& g, bool collect_witnesses) {
    if (g.order() > budget_.ap_max_n)
        throw budget_error("AP solver budget is n <= " + std::to_string(budget_.ap_max_n) + ", got " +
                           std::to_string(g.order()));
    ApResult result;
    if (!g.is_connected()) {
        result.verdict = false;
        IntegerPartition whole;
        whole.parts = {g.order()};
        result.failing_partition = whole;
        return result;
    }
    bind_root(g);
    result.verdict = true;
    for_each_integer_partition(g.order(), -1, [&](const IntegerPartition& p) {
        auto witness = realize_partition(g, p);
        if (!witness) {
            result.verdict = false;
            result.failing_partition = p;
            return false;
        }
        if (collect_witnesses) result.witnesses.emplace(p, std::move(*witness));
        return true;
    });
    return result;
}

} // namespace rp
