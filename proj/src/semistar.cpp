#include "rp/semistar.hpp"

#include "rp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace rp {

SemistarSignature::SemistarSignature(int center, std::vector<int> leaves) : center_(center) {
    if (center < 0) throw std::invalid_argument("semistar center must be >= 0");
    for (int b : leaves)
        if (b < 0) throw std::invalid_argument("semistar leaf entries must be >= 0");
    std::erase(leaves, 0);
    std::sort(leaves.begin(), leaves.end());
    leaves_ = std::move(leaves);
}

int SemistarSignature::order() const {
    return center_ + std::accumulate(leaves_.begin(), leaves_.end(), 0);
}

std::string SemistarSignature::str() const {
    std::string out = "K" + std::to_string(center_) + "(";
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(leaves_[i]);
    }
    return out + ")";
}

SemistarSignature SemistarSignature::parse(std::string_view text) {
    auto [center, leaves] = parse_entries(text);
    return SemistarSignature(center, std::move(leaves));
}

std::pair<int, std::vector<int>> SemistarSignature::parse_entries(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> parse_error {
        return parse_error("signature '" + std::string(text) + "': " + msg, 1, static_cast<int>(i) + 1);
    };
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw fail("expected a non-negative integer");
        return std::stoi(std::string(text.substr(start, i - start)));
    };
    skip_ws();
    if (i >= text.size() || text[i] != 'K') throw fail("expected 'K'");
    ++i;
    const int center = read_int();
    skip_ws();
    if (i >= text.size() || text[i] != '(') throw fail("expected '('");
    ++i;
    std::vector<int> leaves;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
        ++i;
    } else {
        while (true) {
            leaves.push_back(read_int());
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            throw fail("expected ',' or ')'");
        }
    }
    skip_ws();
    if (i != text.size()) throw fail("trailing characters");
    return {center, std::move(leaves)};
}

Graph realize(const SemistarSignature& sig) {
    const int n = sig.order();
    if (n < 1) throw std::invalid_argument("cannot realize an order-0 signature");
    if (n > Graph::max_order)
        throw budget_error("semistar order " + std::to_string(n) + " exceeds the 64-vertex cap");
    Graph g(n);
    const int b0 = sig.center();
    for (int u = 0; u < b0; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v); // center clique + full join outwards
    int base = b0;
    for (int b : sig.leaves()) {
        for (int u = 0; u < b; ++u)
            for (int v = u + 1; v < b; ++v) g.add_edge(base + u, base + v);
        base += b;
    }
    return g;
}

namespace {

// Distributes `rem` over leaves with caps, colex-ascending (last coordinate
// varies slowest, so mass is pushed to the front first). Returns false if
// the visitor stopped the enumeration.
bool distribute(const std::vector<int>& caps, int idx, int rem, std::vector<int>& x,
                const std::vector<int>& prefix_cap_sum,
                const std::function<bool(const std::vector<int>&)>& visit) {
    if (idx == 0) {
        if (rem > caps[0]) return true;
        x[0] = rem;
        return visit(x);
    }
    const int lo = std::max(0, rem - prefix_cap_sum[static_cast<std::size_t>(idx)]);
    const int hi = std::min(caps[static_cast<std::size_t>(idx)], rem);
    for (int v = lo; v <= hi; ++v) {
        x[static_cast<std::size_t>(idx)] = v;
        if (!distribute(caps, idx - 1, rem - v, x, prefix_cap_sum, visit)) return false;
    }
    return true;
}

} // namespace

const SemistarSolver::Entry& SemistarSolver::solve(const SemistarSignature& sig) {
    if (auto it = memo_.find(sig); it != memo_.end()) return it->second;

    Entry entry;
    const int n = sig.order();
    if (n < 1) throw std::invalid_argument("semistar solver needs order >= 1");
    if (!sig.connected()) {
        entry.rp = false;
    } else if (sig.single_clique()) {
        entry.rp = true; // cliques are traceable, hence RP
    } else {
        const int b0 = sig.center();
        const auto& leaves = sig.leaves();
        const int k = sig.leaf_count();
        std::vector<int> prefix_cap_sum(static_cast<std::size_t>(k), 0);
        for (int i = 1; i < k; ++i)
            prefix_cap_sum[static_cast<std::size_t>(i)] =
                prefix_cap_sum[static_cast<std::size_t>(i - 1)] + leaves[static_cast<std::size_t>(i - 1)];

        entry.rp = true;
        for (int lambda = 1; lambda <= n / 2; ++lambda) {
            bool found = false;
            SigSplitEntry chosen;
            // Center contribution first, largest first: splits that keep the
            // selected part anchored on the center resolve fastest.
            for (int x0 = std::min(lambda, b0); x0 >= 0 && !found; --x0) {
                const int rem = lambda - x0;
                if (rem > n - b0) continue;
                std::vector<int> x(static_cast<std::size_t>(k), 0);
                distribute(leaves, k - 1, rem, x, prefix_cap_sum,
                           [&](const std::vector<int>& xs) {
                               std::vector<int> ys(static_cast<std::size_t>(k));
                               for (int i = 0; i < k; ++i)
                                   ys[static_cast<std::size_t>(i)] =
                                       leaves[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(i)];
                               SemistarSignature a(x0, xs);
                               SemistarSignature b(b0 - x0, ys);
                               if (!a.connected() || !b.connected()) return true;
                               if (!solve(a).rp || !solve(b).rp) return true;
                               chosen = SigSplitEntry{lambda, x0, xs};
                               found = true;
                               return false; // first-found split per lambda
                           });
            }
            if (!found) {
                entry.rp = false;
                entry.failing_lambda = lambda;
                entry.splits.clear();
                break;
            }
            entry.splits.push_back(std::move(chosen));
        }
    }
    return memo_.emplace(sig, std::move(entry)).first->second;
}

bool SemistarSolver::is_rp(const SemistarSignature& sig) {
    return solve(sig).rp;
}

std::optional<int> SemistarSolver::first_failing_lambda(const SemistarSignature& sig) {
    return solve(sig).failing_lambda;
}

SigRpResult SemistarSolver::is_rp_certified(const SemistarSignature& sig) {
    if (!solve(sig).rp) return {false, nullptr};
    auto cert = std::make_shared<SignatureCertificate>();
    cert->root = sig;
    std::vector<SemistarSignature> todo{sig};
    while (!todo.empty()) {
        SemistarSignature s = std::move(todo.back());
        todo.pop_back();
        if (cert->nodes.count(s)) continue;
        const Entry& e = solve(s);
        SignatureCertificate::Node node;
        if (s.single_clique()) {
            node.clique = true;
        } else {
            node.entries = e.splits;
            for (const auto& sp : e.splits) {
                std::vector<int> ys(s.leaves().size());
                for (std::size_t i = 0; i < ys.size(); ++i) ys[i] = s.leaves()[i] - sp.x_leaves[i];
                todo.emplace_back(sp.x_center, sp.x_leaves);
                todo.emplace_back(s.center() - sp.x_center, ys);
            }
        }
        cert->nodes.emplace(std::move(s), std::move(node));
    }
    return {true, std::move(cert)};
}

SigVerifyResult verify_signature_certificate(const SemistarSignature& sig,
                                             const SignatureCertificate& cert) {
    auto fail = [](std::string why) { return SigVerifyResult{false, std::move(why)}; };
    if (cert.root != sig) return fail("certificate root " + cert.root.str() + " does not match " + sig.str());
    if (!cert.nodes.count(sig)) return fail("root signature missing from node table");
    for (const auto& [s, node] : cert.nodes) {
        const std::string where = "node " + s.str() + ": ";
        if (s.order() < 1) return fail(where + "empty signature");
        if (node.clique) {
            if (!s.single_clique()) return fail(where + "clique node is not a single clique");
            continue;
        }
        if (s.single_clique()) return fail(where + "clique signature carries a split node");
        if (!s.connected()) return fail(where + "split node on a disconnected signature");
        const int n = s.order();
        const int k = s.leaf_count();
        std::vector<bool> seen(static_cast<std::size_t>(n / 2) + 1, false);
        for (const auto& e : node.entries) {
            if (e.lambda < 1 || e.lambda > n / 2)
                return fail(where + "lambda " + std::to_string(e.lambda) + " out of range");
            if (seen[static_cast<std::size_t>(e.lambda)])
                return fail(where + "duplicate lambda " + std::to_string(e.lambda));
            seen[static_cast<std::size_t>(e.lambda)] = true;
            if (static_cast<int>(e.x_leaves.size()) != k)
                return fail(where + "x-vector arity mismatch");
            if (e.x_center < 0 || e.x_center > s.center())
                return fail(where + "x_center out of range");
            int sum = e.x_center;
            std::vector<int> ys(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) {
                const int xi = e.x_leaves[static_cast<std::size_t>(i)];
                const int bi = s.leaves()[static_cast<std::size_t>(i)];
                if (xi < 0 || xi > bi) return fail(where + "leaf selection out of range");
                ys[static_cast<std::size_t>(i)] = bi - xi;
                sum += xi;
            }
            if (sum != e.lambda)
                return fail(where + "selection sums to " + std::to_string(sum) + ", expected lambda " +
                            std::to_string(e.lambda));
            SemistarSignature a(e.x_center, e.x_leaves);
            SemistarSignature b(s.center() - e.x_center, ys);
            if (!a.connected() || !b.connected())
                return fail(where + "lambda " + std::to_string(e.lambda) + " split has a disconnected part");
            if (!cert.nodes.count(a)) return fail(where + "child " + a.str() + " missing from node table");
            if (!cert.nodes.count(b)) return fail(where + "child " + b.str() + " missing from node table");
        }
        for (int lambda = 1; lambda <= n / 2; ++lambda)
            if (!seen[static_cast<std::size_t>(lambda)])
                return fail(where + "missing lambda " + std::to_string(lambda));
    }
    return {true, ""};
}

namespace {

bool dominates(const std::vector<int>& big, const std::vector<int>& small) {
    if (big.size() != small.size()) return false;
    for (std::size_t i = 0; i < big.size(); ++i)
        if (big[i] < small[i]) return false;
    return true;
}

void sorted_vectors_rec(int k, int bound, int min_entry, std::vector<int>& acc,
                        std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == k) {
        out.push_back(acc);
        return;
    }
    for (int v = min_entry; v <= bound; ++v) {
        acc.push_back(v);
        sorted_vectors_rec(k, bound, v, acc, out);
        acc.pop_back();
    }
}

// All nondecreasing positive k-vectors with entries <= bound, ordered by
// total sum ascending (ties: lexicographic). Sum order is dominance
// compatible: a proper entrywise minorant has a strictly smaller sum.
std::vector<std::vector<int>> sorted_vectors_by_sum(int k, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    sorted_vectors_rec(k, bound, 1, acc, out);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    });
    return out;
}

// No RP (b0,k) semistar with positive leaves exists at all: with the center
// as the cut, c(G-S) = k components, and k >= 3*b0 forbids RP (for b0 = 1
// the tripode characterisation caps k at 3; b0 = 0 with k >= 2 is
// disconnected).
bool rp_structurally_impossible(int b0, int k) {
    if (b0 == 0) return k >= 2;
    if (b0 == 1) return k > 3;
    return k >= 3 * b0;
}

} // namespace

MinimalSetResult enumerate_minimal_rp_semistars(SemistarSolver& solver, int b0, int k, int bound) {
    if (b0 < 0 || k < 1 || bound < 1)
        throw std::invalid_argument("enumerate_minimal_rp_semistars: need b0 >= 0, k >= 1, bound >= 1");
    MinimalSetResult result;
    result.b0 = b0;
    result.k = k;
    result.bound = bound;

    std::vector<std::vector<int>> minimal_vectors;
    for (const auto& v : sorted_vectors_by_sum(k, bound)) {
        bool dominated = false;
        for (const auto& m : minimal_vectors)
            if (dominates(v, m)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        SemistarSignature sig(b0, v);
        if (solver.is_rp(sig)) {
            minimal_vectors.push_back(v);
            result.minimal_signatures.push_back(std::move(sig));
        }
    }

    if (rp_structurally_impossible(b0, k)) {
        result.exhaustive_below_bound = true;
    } else {
        // Clamp argument: any vector outside the box dominates its clamp,
        // which touches the boundary. If every boundary vector dominates a
        // found minimal, nothing minimal lives outside the box.
        bool closed = !minimal_vectors.empty();
        if (closed)
            for (const auto& v : sorted_vectors_by_sum(k, bound)) {
                if (v.back() != bound) continue;
                bool covers = false;
                for (const auto& m : minimal_vectors)
                    if (dominates(v, m)) {
                        covers = true;
                        break;
                    }
                if (!covers) {
                    closed = false;
                    break;
                }
            }
        result.exhaustive_below_bound = closed;
    }
    return result;
}

MinimalityResult check_minimality(SemistarSolver& solver, const SemistarSignature& sig) {
    if (sig.leaf_count() < 1 || (!sig.leaves().empty() && sig.leaves().front() < 1))
        throw std::invalid_argument("check_minimality needs positive leaf entries");
    if (!solver.is_rp(sig)) throw std::invalid_argument("check_minimality: signature is not RP");

    const auto& b = sig.leaves();
    const int k = sig.leaf_count();
    // Nondecreasing positive candidates aligned under the sorted leaves.
    std::vector<std::vector<int>> candidates;
    std::vector<int> acc;
    const std::function<void()> rec = [&] {
        const int i = static_cast<int>(acc.size());
        if (i == k) {
            if (acc != b) candidates.push_back(acc);
            return;
        }
        const int lo = i == 0 ? 1 : acc.back();
        for (int v = lo; v <= b[static_cast<std::size_t>(i)]; ++v) {
            acc.push_back(v);
            rec();
            acc.pop_back();
        }
    };
    rec();
    std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& c) {
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(c.begin(), c.end(), 0);
    });
    for (const auto& c : candidates) {
        SemistarSignature candidate(sig.center(), c);
        if (solver.is_rp(candidate)) return {false, candidate};
    }
    return {true, std::nullopt};
}

} // namespace rp
