#include "rp/conditions.hpp"

#include "rp/errors.hpp"
#include "rp/graph_algos.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace rp {

bool rp_triple(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] < 1) return false;
    if (t == std::array<int, 3>{2, 4, 6}) return true;
    if (t[0] != 1) return false;
    const int bb = t[1], cc = t[2];
    switch (bb) {
    case 1: return cc % 2 == 0;
    case 2: return cc % 3 == 0 || cc % 3 == 1;
    case 3: return cc % 2 == 0;
    case 4: return cc == 5 || cc == 6 || cc == 8 || cc == 10 || cc == 13 || cc == 18;
    case 5: return cc == 6;
    case 6: return cc == 7 || cc == 8 || cc == 10 || cc == 12 || cc == 14;
    default: return false;
    }
}

TreeRpVerdict tree_is_rp(const Graph& g) {
    const int n = g.order();
    if (!g.is_connected() || g.edge_count() != n - 1)
        throw std::invalid_argument("tree_is_rp: graph is not a tree");

    int branch = -1, branch_count = 0, max_deg = 0;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        max_deg = std::max(max_deg, d);
        if (d >= 3) {
            branch = v;
            ++branch_count;
        }
    }
    if (max_deg <= 2) return {true, TreeRpVerdict::Reason::path, std::nullopt};
    if (branch_count > 1 || max_deg > 3) return {false, TreeRpVerdict::Reason::excluded, std::nullopt};

    // Exactly one degree-3 vertex, everything else degree <= 2: a tripode.
    auto legs = g.components(VertexSet::of({branch}, n));
    std::array<int, 3> t{legs[0].size(), legs[1].size(), legs[2].size()};
    std::sort(t.begin(), t.end());
    if (t == std::array<int, 3>{2, 4, 6}) return {true, TreeRpVerdict::Reason::sporadic_246, t};
    if (rp_triple(t[0], t[1], t[2])) return {true, TreeRpVerdict::Reason::tripode_table, t};
    return {false, TreeRpVerdict::Reason::excluded, t};
}

ModCutReport mod_cut_check(const Graph& g, const VertexSet& S, int k) {
    if (k < 2) throw std::invalid_argument("mod_cut_check needs k >= 2");
    const std::uint64_t rest = g.vertex_mask() & ~S.bits;
    if (!rest) throw std::invalid_argument("mod_cut_check: S must be a proper subset of V");
    int residue_sum = 0;
    for (int size : g.component_sizes_within(rest)) residue_sum += size % k;
    ModCutReport r;
    r.k = k;
    r.cut = S;
    r.w_k = Rational{residue_sum, k - 1};
    r.bound = Rational{S.size() * (k - 1) + g.order() % k, k - 1};
    r.satisfied = r.bound >= r.w_k;
    return r;
}

namespace {

// Iterates masks of fixed popcount in increasing numeric order (Gosper).
template <typename F>
bool for_each_subset_of_size(std::uint64_t full, int size, F&& f) {
    const int n = std::popcount(full);
    if (size < 0 || size > n) return true;
    if (size == 0) return f(std::uint64_t{0});
    // Work in compressed index space, then expand through `full`.
    std::vector<int> verts;
    for (std::uint64_t b = full; b; b &= b - 1) verts.push_back(std::countr_zero(b));
    std::uint64_t s = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
        std::uint64_t mask = 0;
        for (std::uint64_t b = s; b; b &= b - 1)
            mask |= std::uint64_t{1} << verts[static_cast<std::size_t>(std::countr_zero(b))];
        if (!f(mask)) return false;
        const std::uint64_t c = s & (~s + 1);
        const std::uint64_t r = s + c;
        if (!r || r >= limit) break;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return true;
}

} // namespace

std::optional<ModCutViolation> mod_cut_scan(const Graph& g, int max_cut) {
    const int n = g.order();
    if (n > cut_scan_budget_n && max_cut > 4)
        throw budget_error("mod_cut_scan budget: n <= " + std::to_string(cut_scan_budget_n) +
                           " or max_cut <= 4");
    // One pass over cuts computing component residues for every k at once;
    // the reported violation is the (k, |S|, bits)-minimal one, identical to
    // scanning k ascending then S by size then bit pattern.
    const std::uint64_t full = g.vertex_mask();
    bool have = false;
    int best_k = 0;
    std::uint64_t best_s = 0;
    auto better = [&](int k, std::uint64_t s) {
        if (!have) return true;
        if (k != best_k) return k < best_k;
        const int sz = std::popcount(s), bsz = std::popcount(best_s);
        if (sz != bsz) return sz < bsz;
        return s < best_s;
    };
    for (int size = 0; size <= std::min(max_cut, n - 1); ++size) {
        for_each_subset_of_size(full, size, [&](std::uint64_t s) {
            const auto sizes = g.component_sizes_within(full & ~s);
            for (int k = 2; k <= n; ++k) {
                int residue_sum = 0;
                for (int c : sizes) residue_sum += c % k;
                // bound >= w_k  <=>  |S|(k-1) + n mod k >= sum of residues
                if (size * (k - 1) + n % k >= residue_sum) continue;
                if (better(k, s)) {
                    have = true;
                    best_k = k;
                    best_s = s;
                }
                break; // larger k for this S cannot beat the recorded pair
            }
            return true;
        });
    }
    if (!have) return std::nullopt;
    const VertexSet cut{best_s, n};
    return ModCutViolation{cut, best_k, mod_cut_check(g, cut, best_k)};
}

ToughnessBoundResult toughness_bound_check_bounded(const Graph& g, bool rp_claimed, int max_cut) {
    ToughnessBoundResult result;
    if (!rp_claimed) return result;
    const int n = g.order();
    const std::uint64_t full = g.vertex_mask();
    for (int size = 1; size <= std::min(max_cut, n - 1) && result.consistent; ++size) {
        for_each_subset_of_size(full, size, [&](std::uint64_t s) {
            const int c = g.component_count_within(full & ~s);
            const bool breaks = (size >= 2) ? c >= 3 * size : c >= 4;
            if (breaks) {
                result.consistent = false;
                result.witness = {VertexSet{s, n}, c};
                return false;
            }
            return true;
        });
    }
    return result;
}

ToughnessBoundResult toughness_bound_check(const Graph& g, bool rp_claimed) {
    if (g.order() > cut_scan_budget_n)
        throw budget_error("toughness_bound_check budget is n <= " + std::to_string(cut_scan_budget_n) +
                           "; use the bounded variant");
    return toughness_bound_check_bounded(g, rp_claimed, g.order() - 1);
}

CutComponentsMax max_components_at_cut_size(const Graph& g, int cut_size) {
    const int n = g.order();
    if (cut_size < 0 || cut_size >= n)
        throw std::invalid_argument("max_components_at_cut_size: cut size must be in 0..n-1");
    CutComponentsMax best{0, VertexSet{0, n}};
    const std::uint64_t full = g.vertex_mask();
    for_each_subset_of_size(full, cut_size, [&](std::uint64_t s) {
        const int c = g.component_count_within(full & ~s);
        if (c > best.components) best = {c, VertexSet{s, n}};
        return true;
    });
    return best;
}

std::optional<VertexSet> spider_obstruction(const Graph& g, int k, int max_cut) {
    if (k < 2) throw std::invalid_argument("spider_obstruction needs k >= 2");
    const int n = g.order();
    if (n > cut_scan_budget_n && max_cut > 4)
        throw budget_error("spider_obstruction budget: n <= " + std::to_string(cut_scan_budget_n) +
                           " or max_cut <= 4");
    const std::uint64_t full = g.vertex_mask();
    std::optional<VertexSet> found;
    for (int size = 0; size <= std::min(max_cut, n - 1) && !found; ++size) {
        for_each_subset_of_size(full, size, [&](std::uint64_t s) {
            if (g.component_count_within(full & ~s) >= size + k) {
                found = VertexSet{s, n};
                return false;
            }
            return true;
        });
    }
    return found;
}

namespace {

struct SpanningTreeSearch {
    const Graph& g;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> chosen;
    long long visited = 0;
    static constexpr long long cap = 20'000'000;
    std::optional<Graph> found;

    bool connectable(std::size_t next, const std::vector<int>& uf_parent) const {
        // Union of already-chosen forest and all undecided edges.
        std::vector<int> parent = uf_parent;
        const auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
            return v;
        };
        int comps = 0;
        for (int v = 0; v < g.order(); ++v)
            if (parent[static_cast<std::size_t>(v)] == v) ++comps;
        for (std::size_t i = next; i < edges.size() && comps > 1; ++i) {
            const int ra = find(edges[i].first), rb = find(edges[i].second);
            if (ra != rb) {
                parent[static_cast<std::size_t>(ra)] = rb;
                --comps;
            }
        }
        return comps == 1;
    }

    bool rec(std::size_t idx, std::vector<int>& parent, int picked) {
        if (picked == g.order() - 1) {
            if (++visited > cap) throw budget_error("spanning tree enumeration cap exceeded");
            Graph tree(g.order());
            for (int e : chosen) tree.add_edge(edges[static_cast<std::size_t>(e)].first,
                                               edges[static_cast<std::size_t>(e)].second);
            if (tree_is_rp(tree).is_rp) {
                found = std::move(tree);
                return false;
            }
            return true;
        }
        if (idx >= edges.size()) return true;
        const auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
            return v;
        };
        const int ra = find(edges[idx].first), rb = find(edges[idx].second);
        if (ra != rb) {
            std::vector<int> saved = parent;
            parent[static_cast<std::size_t>(ra)] = rb;
            chosen.push_back(static_cast<int>(idx));
            const bool go_on = rec(idx + 1, parent, picked + 1);
            chosen.pop_back();
            parent = std::move(saved);
            if (!go_on) return false;
        }
        // Exclude this edge; only continue if a spanning tree is still possible.
        if (connectable(idx + 1, parent)) return rec(idx + 1, parent, picked);
        return true;
    }
};

} // namespace

RpSpanningTreeResult has_rp_spanning_tree(const Graph& g) {
    const int n = g.order();
    if (n > spanning_tree_budget_n)
        throw budget_error("has_rp_spanning_tree budget is n <= " +
                           std::to_string(spanning_tree_budget_n));
    if (!g.is_connected()) return {false, std::nullopt};
    if (n == 1) return {true, g};

    // Fast path: a Hamiltonian path is an RP spanning tree.
    if (auto tr = is_traceable(g); tr.traceable) {
        Graph path(n);
        for (std::size_t i = 0; i + 1 < tr.path.size(); ++i) path.add_edge(tr.path[i], tr.path[i + 1]);
        return {true, path};
    }
    // RP trees are spanning subdivisions of K_{1,<=3}; a cut with
    // c(G-S) >= |S| + 3 rules them all out without enumerating.
    if (spider_obstruction(g, 3, std::min(4, n - 1))) return {false, std::nullopt};

    SpanningTreeSearch search{g, g.edges(), {}, 0, {}};
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    search.rec(0, parent, 0);
    if (search.found) return {true, std::move(search.found)};
    return {false, std::nullopt};
}

} // namespace rp
