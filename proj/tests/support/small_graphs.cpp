#include "support/small_graphs.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rp::testsupport {

namespace {

int pair_index(int i, int j, int n) {
    // Upper-triangle index of (i,j), i < j, row-major.
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t edge_code(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    std::uint64_t code = 0;
    for (auto [u, v] : g.edges()) {
        int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
        if (a > b) std::swap(a, b);
        code |= std::uint64_t{1} << pair_index(a, b, n);
    }
    return code;
}

} // namespace

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw std::invalid_argument("canonical_code is for n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, edge_code(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (auto [u, v] : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

std::vector<Graph> all_graphs(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("all_graphs is for 1 <= n <= 8");
    std::vector<Graph> current{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::map<std::uint64_t, Graph> next;
        for (const Graph& base : current) {
            for (std::uint64_t hood = 0; hood < (std::uint64_t{1} << (k - 1)); ++hood) {
                Graph g(k);
                for (auto [u, v] : base.edges()) g.add_edge(u, v);
                for (std::uint64_t b = hood; b; b &= b - 1) g.add_edge(k - 1, std::countr_zero(b));
                next.emplace(canonical_code(g), g);
            }
        }
        current.clear();
        for (auto& [code, g] : next) current.push_back(std::move(g));
    }
    return current;
}

std::vector<Graph> all_connected_graphs(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (g.is_connected()) out.push_back(g);
    return out;
}

Graph random_connected_graph(int n, int percent_edge, Rng& rng) {
    while (true) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(100) < percent_edge) g.add_edge(u, v);
        if (g.order() == 1 || g.is_connected()) return g;
    }
}

Graph random_tree(int n, Rng& rng) {
    if (n == 1) return Graph(1);
    if (n == 2) return Graph::from_edge_list(2, {{0, 1}});
    // Pruefer decoding.
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& s : seq) s = rng.below(n);
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++deg[static_cast<std::size_t>(s)];
    Graph g(n);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int s : seq) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (deg[static_cast<std::size_t>(leaf)] == 1 && !used[static_cast<std::size_t>(leaf)]) {
                g.add_edge(leaf, s);
                used[static_cast<std::size_t>(leaf)] = true;
                --deg[static_cast<std::size_t>(s)];
                break;
            }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1) (a < 0 ? a : b) = v;
    g.add_edge(a, b);
    return g;
}

std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.below(i + 1))]);
    return perm;
}

bool oracle_has_ham_path(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw std::invalid_argument("oracle_has_ham_path is for n <= 8");
    if (n == 1) return true;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i)
            if (!g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

int matching_rec(const std::vector<std::pair<int, int>>& edges, std::size_t idx, std::uint64_t used) {
    if (idx == edges.size()) return 0;
    int best = matching_rec(edges, idx + 1, used);
    const auto [u, v] = edges[idx];
    const std::uint64_t need = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    if ((used & need) == 0) best = std::max(best, 1 + matching_rec(edges, idx + 1, used | need));
    return best;
}

} // namespace

int oracle_max_matching(const Graph& g) {
    return matching_rec(g.edges(), 0, 0);
}

int oracle_component_count(const Graph& g, std::uint64_t removed) {
    const int n = g.order();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<int> state(static_cast<std::size_t>(n), 0); // 0 unseen, 1 seen, 2 removed
    for (int v = 0; v < n; ++v)
        if ((removed >> v) & 1u) state[static_cast<std::size_t>(v)] = 2;
    int comps = 0;
    for (int v = 0; v < n; ++v) {
        if (state[static_cast<std::size_t>(v)] != 0) continue;
        ++comps;
        std::vector<int> stack{v};
        state[static_cast<std::size_t>(v)] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(u)])
                if (state[static_cast<std::size_t>(w)] == 0) {
                    state[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

std::pair<int, int> oracle_toughness(const Graph& g) {
    const int n = g.order();
    int bn = 0, bd = 0; // best |S|/c; 0/0 = none found
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n) - 1; ++s) {
        const int c = oracle_component_count(g, s);
        if (c < 2) continue;
        const int size = std::popcount(s);
        if (bd == 0 || static_cast<long long>(size) * bd < static_cast<long long>(bn) * c) {
            bn = size;
            bd = c;
        }
    }
    const int d = std::gcd(bn, bd);
    return d ? std::pair<int, int>{bn / d, bd / d} : std::pair<int, int>{bn, bd};
}

int oracle_independence(const Graph& g) {
    const int n = g.order();
    if (n > 20) throw std::invalid_argument("oracle_independence is for n <= 20");
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool independent = true;
        for (auto [u, v] : g.edges())
            if (((s >> u) & 1u) && ((s >> v) & 1u)) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, std::popcount(s));
    }
    return best;
}

namespace {

bool realizable_rec(const Graph& g, std::uint64_t mask, std::vector<int>& parts) {
    if (parts.empty()) return mask == 0;
    int anchor = -1;
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1u) {
            anchor = v;
            break;
        }
    const std::uint64_t rest_bits = mask & ~(std::uint64_t{1} << anchor);
    std::vector<int> rest_verts;
    for (int v = 0; v < g.order(); ++v)
        if ((rest_bits >> v) & 1u) rest_verts.push_back(v);
    const std::uint64_t limit = std::uint64_t{1} << rest_verts.size();
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        if (pi > 0 && parts[pi] == parts[pi - 1]) continue;
        const int want = parts[pi];
        for (std::uint64_t pick = 0; pick < limit; ++pick) {
            if (std::popcount(pick) != want - 1) continue;
            std::uint64_t subset = std::uint64_t{1} << anchor;
            for (std::uint64_t b = pick; b; b &= b - 1)
                subset |= std::uint64_t{1} << rest_verts[static_cast<std::size_t>(std::countr_zero(b))];
            // The part is connected iff the rest of the graph removed leaves
            // exactly one component.
            if (oracle_component_count(g, g.vertex_mask() & ~subset) != 1) continue;
            std::vector<int> remaining;
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (j != pi) remaining.push_back(parts[j]);
            if (realizable_rec(g, mask & ~subset, remaining)) return true;
        }
    }
    return false;
}

} // namespace

bool oracle_partition_realizable(const Graph& g, std::vector<int> parts) {
    std::sort(parts.begin(), parts.end());
    if (std::accumulate(parts.begin(), parts.end(), 0) != g.order())
        throw std::invalid_argument("partition must sum to the graph order");
    return realizable_rec(g, g.vertex_mask(), parts);
}

} // namespace rp::testsupport
