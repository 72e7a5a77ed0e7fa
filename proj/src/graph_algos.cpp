#include "rp/graph_algos.hpp"

#include "rp/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace rp {

namespace {

// Relabels mask vertices to 0..k-1 and runs the endpoint-set DP:
// reach[S] has bit e set iff some path covers S and ends at e.
std::optional<std::vector<int>> ham_path_dp(const Graph& g, std::uint64_t mask) {
    const int k = std::popcount(mask);
    if (k == 0) return std::nullopt;
    if (k > hamiltonian_budget_n)
        throw budget_error("Hamiltonian path DP limited to n <= " +
                           std::to_string(hamiltonian_budget_n) + ", got " + std::to_string(k));
    std::vector<int> verts;
    verts.reserve(static_cast<std::size_t>(k));
    for (std::uint64_t b = mask; b; b &= b - 1) verts.push_back(std::countr_zero(b));
    if (k == 1) return std::vector<int>{verts[0]};

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && g.has_edge(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]))
                adj[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;

    const std::uint32_t full = (k == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << k) - 1);
    std::vector<std::uint32_t> reach(std::size_t{1} << k, 0);
    for (int v = 0; v < k; ++v) reach[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t ends = reach[s];
        if (!ends) continue;
        for (std::uint32_t b = ends; b; b &= b - 1) {
            const int v = std::countr_zero(b);
            for (std::uint32_t nb = adj[static_cast<std::size_t>(v)] & ~s; nb; nb &= nb - 1) {
                const int w = std::countr_zero(nb);
                reach[s | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }
    if (!reach[full]) return std::nullopt;

    // Reconstruct backwards from any endpoint of the full set.
    std::vector<int> order(static_cast<std::size_t>(k));
    std::uint32_t s = full;
    int v = std::countr_zero(reach[full]);
    for (int pos = k - 1; pos >= 0; --pos) {
        order[static_cast<std::size_t>(pos)] = verts[static_cast<std::size_t>(v)];
        const std::uint32_t prev = s & ~(std::uint32_t{1} << v);
        if (!prev) break;
        const std::uint32_t cands = reach[prev] & adj[static_cast<std::size_t>(v)];
        v = std::countr_zero(cands);
        s = prev;
    }
    return order;
}

} // namespace

std::optional<std::vector<int>> hamiltonian_path_within(const Graph& g, std::uint64_t mask) {
    return ham_path_dp(g, mask);
}

TraceabilityResult is_traceable(const Graph& g) {
    auto path = ham_path_dp(g, g.vertex_mask());
    if (!path) return {false, {}};
    return {true, std::move(*path)};
}

bool is_hamiltonian(const Graph& g) {
    const int n = g.order();
    if (n > hamiltonian_budget_n)
        throw budget_error("Hamiltonian cycle DP limited to n <= " +
                           std::to_string(hamiltonian_budget_n) + ", got " + std::to_string(n));
    if (n < 3) return false;
    // Paths anchored at vertex 0; cycle exists iff a spanning path from 0
    // ends at a neighbor of 0.
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) adj[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(g.neighbors(i));
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
    reach[1] = 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        if (!(s & 1u)) continue;
        std::uint32_t ends = reach[s];
        if (!ends) continue;
        for (std::uint32_t b = ends; b; b &= b - 1) {
            const int v = std::countr_zero(b);
            for (std::uint32_t nb = adj[static_cast<std::size_t>(v)] & ~s; nb; nb &= nb - 1) {
                const std::uint32_t wbit = nb & (~nb + 1);
                reach[s | wbit] |= wbit;
            }
        }
    }
    return (reach[full] & adj[0]) != 0;
}

namespace {

struct MatchingSearch {
    const Graph& g;
    std::unordered_map<std::uint64_t, int> memo;
    int target; // stop early once a matching of this size is known

    int best(std::uint64_t mask) {
        if (!mask) return 0;
        const int v = std::countr_zero(mask);
        const std::uint64_t rest = mask & (mask - 1);
        if (!rest) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int out = best(rest); // v stays unmatched
        if (out < target) {
            for (std::uint64_t nb = g.neighbors(v) & rest; nb; nb &= nb - 1) {
                const std::uint64_t u = nb & (~nb + 1);
                out = std::max(out, 1 + best(rest & ~u));
                if (out >= target) break;
            }
        }
        memo.emplace(mask, out);
        return out;
    }
};

} // namespace

int maximum_matching_size(const Graph& g) {
    MatchingSearch s{g, {}, g.order() / 2};
    return s.best(g.vertex_mask());
}

MatchingStatus matching_status(const Graph& g) {
    const int n = g.order();
    const int m = maximum_matching_size(g);
    if (n % 2 == 0) return m == n / 2 ? MatchingStatus::perfect : MatchingStatus::neither;
    return m == n / 2 ? MatchingStatus::near_perfect : MatchingStatus::neither;
}

namespace {

int alpha_rec(const Graph& g, std::uint64_t allowed, int current, int& best) {
    if (current + std::popcount(allowed) <= best) return best;
    if (!allowed) {
        best = std::max(best, current);
        return best;
    }
    // Branch on a maximum-degree vertex within `allowed`.
    int pick = -1, pick_deg = -1;
    for (std::uint64_t b = allowed; b; b &= b - 1) {
        const int v = std::countr_zero(b);
        const int d = std::popcount(g.neighbors(v) & allowed);
        if (d > pick_deg) {
            pick_deg = d;
            pick = v;
        }
    }
    if (pick_deg == 0) {
        best = std::max(best, current + std::popcount(allowed));
        return best;
    }
    const std::uint64_t bit = std::uint64_t{1} << pick;
    alpha_rec(g, allowed & ~bit & ~g.neighbors(pick), current + 1, best); // take
    alpha_rec(g, allowed & ~bit, current, best);                          // skip
    return best;
}

} // namespace

int independence_number(const Graph& g) {
    int best = 0;
    return alpha_rec(g, g.vertex_mask(), 0, best);
}

std::optional<int> min_degree_sum_nonadjacent(const Graph& g) {
    const int n = g.order();
    std::optional<int> sigma;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) {
                const int s = g.degree(u) + g.degree(v);
                if (!sigma || s < *sigma) sigma = s;
            }
    return sigma;
}

namespace {

// Max vertex-disjoint s-t paths for nonadjacent s,t (Menger): BFS max-flow
// on the vertex-split digraph. Node 2v = v_in, 2v+1 = v_out.
int disjoint_paths(const Graph& g, int s, int t) {
    const int n = g.order();
    const int nodes = 2 * n;
    std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes),
                                      std::vector<int>(static_cast<std::size_t>(nodes), 0));
    for (int v = 0; v < n; ++v) {
        cap[static_cast<std::size_t>(2 * v)][static_cast<std::size_t>(2 * v + 1)] = (v == s || v == t) ? n : 1;
        for (std::uint64_t nb = g.neighbors(v); nb; nb &= nb - 1) {
            const int w = std::countr_zero(nb);
            cap[static_cast<std::size_t>(2 * v + 1)][static_cast<std::size_t>(2 * w)] = n;
        }
    }
    const int src = 2 * s + 1, dst = 2 * t;
    int total = 0;
    while (true) {
        std::vector<int> prev(static_cast<std::size_t>(nodes), -1);
        prev[static_cast<std::size_t>(src)] = src;
        std::vector<int> queue{src};
        for (std::size_t qi = 0; qi < queue.size() && prev[static_cast<std::size_t>(dst)] == -1; ++qi)
            for (int w = 0; w < nodes; ++w)
                if (prev[static_cast<std::size_t>(w)] == -1 &&
                    cap[static_cast<std::size_t>(queue[qi])][static_cast<std::size_t>(w)] > 0) {
                    prev[static_cast<std::size_t>(w)] = queue[qi];
                    queue.push_back(w);
                }
        if (prev[static_cast<std::size_t>(dst)] == -1) break;
        for (int w = dst; w != src; w = prev[static_cast<std::size_t>(w)]) {
            const int p = prev[static_cast<std::size_t>(w)];
            cap[static_cast<std::size_t>(p)][static_cast<std::size_t>(w)] -= 1;
            cap[static_cast<std::size_t>(w)][static_cast<std::size_t>(p)] += 1;
        }
        ++total;
    }
    return total;
}

} // namespace

std::optional<int> vertex_connectivity(const Graph& g) {
    if (g.is_complete()) return std::nullopt;
    if (!g.is_connected()) return 0;
    const int n = g.order();
    int best = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) best = std::min(best, disjoint_paths(g, u, v));
    return best;
}

ToughnessResult toughness(const Graph& g) {
    const int n = g.order();
    if (g.is_complete()) return {std::nullopt, {}, 0, AbsenceReason::complete_graph};
    if (!g.is_connected()) return {std::nullopt, {}, 0, AbsenceReason::disconnected};
    if (n > toughness_budget_n) return {std::nullopt, {}, 0, AbsenceReason::over_budget};
    const std::uint64_t full = g.vertex_mask();
    std::optional<Rational> best;
    VertexSet witness{0, n};
    int witness_c = 0;
    for (std::uint64_t s = 1; s < full; ++s) {
        const int c = g.component_count_within(full & ~s);
        if (c < 2) continue;
        const Rational ratio{std::popcount(s), c};
        if (!best || ratio < *best) {
            best = ratio;
            witness = VertexSet{s, n};
            witness_c = c;
        }
    }
    return {best, witness, witness_c, AbsenceReason::present};
}

MetricsReport metrics(const Graph& g) {
    MetricsReport r;
    r.alpha = independence_number(g);
    r.sigma = min_degree_sum_nonadjacent(g);
    r.kappa = vertex_connectivity(g);
    auto t = toughness(g);
    r.toughness = t.value;
    r.toughness_witness = t.witness;
    r.toughness_status = t.status;
    return r;
}

OreChecks sigma_ore_checks(const Graph& g) {
    const auto sigma = min_degree_sum_nonadjacent(g);
    if (!sigma) throw std::invalid_argument("sigma undefined: graph is complete");
    const int n = g.order();
    return {*sigma >= n - 1, *sigma >= n};
}

} // namespace rp
