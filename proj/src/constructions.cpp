#include "rp/constructions.hpp"

#include "rp/errors.hpp"
#include "rp/graph_algos.hpp"
#include "rp/solver.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace rp {

namespace {

void check_order(long long n, const std::string& what) {
    if (n < 1) throw construction_error(what + ": order must be at least 1");
    if (n > Graph::max_order)
        throw construction_error(what + ": order " + std::to_string(n) + " exceeds the 64-vertex cap");
}

} // namespace

Graph build_path(int n) {
    check_order(n, "path");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph build_cycle(int n) {
    check_order(n, "cycle");
    if (n < 3) throw construction_error("cycle needs at least 3 vertices");
    Graph g = build_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph build_clique(int n) {
    check_order(n, "clique");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph build_empty(int n) {
    check_order(n, "empty graph");
    return Graph(n);
}

Graph build_complete_multipartite(const std::vector<int>& part_sizes) {
    if (part_sizes.empty()) throw construction_error("complete multipartite needs at least one part");
    long long n = 0;
    for (int p : part_sizes) {
        if (p < 1) throw construction_error("complete multipartite part sizes must be positive");
        n += p;
    }
    check_order(n, "complete multipartite");
    Graph g(static_cast<int>(n));
    int base_u = 0;
    for (std::size_t i = 0; i < part_sizes.size(); ++i) {
        int base_v = base_u + part_sizes[i];
        for (std::size_t j = i + 1; j < part_sizes.size(); ++j) {
            for (int u = 0; u < part_sizes[i]; ++u)
                for (int v = 0; v < part_sizes[j]; ++v) g.add_edge(base_u + u, base_v + v);
            base_v += part_sizes[j];
        }
        base_u += part_sizes[i];
    }
    return g;
}

Graph build_tripode(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw construction_error("tripode legs must be positive");
    const long long n = 1LL + a + b + c;
    check_order(n, "tripode");
    Graph g(static_cast<int>(n));
    int next = 1;
    for (int leg : {a, b, c}) {
        g.add_edge(0, next);
        for (int i = 1; i < leg; ++i) g.add_edge(next + i - 1, next + i);
        next += leg;
    }
    return g;
}

Graph build_balloon(const std::vector<int>& legs) {
    if (legs.empty()) throw construction_error("balloon needs at least one path");
    for (int b : legs)
        if (b < 1)
            throw construction_error(
                "balloon paths of length 0 are rejected: u and v must stay non-adjacent");
    const long long n = 2LL + std::accumulate(legs.begin(), legs.end(), 0LL);
    check_order(n, "balloon");
    Graph g(static_cast<int>(n));
    int next = 2; // 0 = u, 1 = v
    for (int b : legs) {
        g.add_edge(0, next);
        for (int i = 1; i < b; ++i) g.add_edge(next + i - 1, next + i);
        g.add_edge(next + b - 1, 1);
        next += b;
    }
    return g;
}

ConstructionResult clique_construction(int n) {
    ConstructionResult r;
    r.graph = build_clique(n);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    r.certificate = n == 1 ? RpCertificate::make_singleton(0) : RpCertificate::make_path(std::move(order));
    r.provenance = "Kn" + std::to_string(n);
    return r;
}

ConstructionResult sequential_join(const std::vector<ConstructionResult>& parts) {
    if (parts.empty()) throw construction_error("sequential join needs at least one part");
    long long n = 0;
    for (const auto& p : parts) n += p.graph.order();
    check_order(n, "sequential join");

    Graph g(static_cast<int>(n));
    std::vector<RpCertPtr> blocks;
    bool all_certified = true;
    int base = 0, prev_base = 0, prev_order = 0;
    std::string provenance = "join(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Graph& part = parts[i].graph;
        for (auto [u, v] : part.edges()) g.add_edge(base + u, base + v);
        if (i > 0)
            for (int u = 0; u < prev_order; ++u)
                for (int v = 0; v < part.order(); ++v) g.add_edge(prev_base + u, base + v);
        if (parts[i].certificate) {
            const auto check = verify_certificate(part, *parts[i].certificate);
            if (!check.valid)
                throw construction_error("sequential join: invalid certificate for part " +
                                         std::to_string(i) + ": " + check.failure_reason);
            std::vector<int> map(static_cast<std::size_t>(part.order()));
            std::iota(map.begin(), map.end(), base);
            blocks.push_back(relabel_certificate(parts[i].certificate, map));
        } else {
            all_certified = false;
        }
        if (i) provenance += "+";
        provenance += parts[i].provenance.empty() ? "?" : parts[i].provenance;
        prev_base = base;
        prev_order = part.order();
        base += part.order();
    }
    provenance += ")";

    ConstructionResult r;
    r.graph = std::move(g);
    r.provenance = std::move(provenance);
    if (all_certified) r.certificate = RpCertificate::make_join(std::move(blocks));
    return r;
}

ConstructionResult build_replacement(int template_center, const std::vector<int>& template_leaves,
                                     const std::vector<ConstructionResult>& components,
                                     SemistarSolver& signatures) {
    if (template_center < 1) throw construction_error("replacement template center must be positive");
    if (template_leaves.empty()) throw construction_error("replacement template needs leaf entries");
    for (int b : template_leaves)
        if (b < 1) throw construction_error("replacement template leaf entries must be positive");
    if (components.size() != template_leaves.size() + 1)
        throw construction_error("replacement needs one component per template entry (center first)");

    SemistarSignature tmpl(template_center, template_leaves);
    auto sig_result = signatures.is_rp_certified(tmpl);
    if (!sig_result.verdict)
        throw construction_error("replacement template " + tmpl.str() + " is not RP");

    long long n = 0;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const int want = i == 0 ? template_center : template_leaves[i - 1];
        if (components[i].graph.order() != want)
            throw construction_error("component " + std::to_string(i) + " has order " +
                                     std::to_string(components[i].graph.order()) +
                                     ", template entry wants " + std::to_string(want));
        if (!components[i].certificate)
            throw construction_error("component " + std::to_string(i) + " carries no RP certificate");
        const auto check = verify_certificate(components[i].graph, *components[i].certificate);
        if (!check.valid)
            throw construction_error("component " + std::to_string(i) +
                                     " certificate invalid: " + check.failure_reason);
        n += want;
    }
    check_order(n, "replacement");

    Graph g(static_cast<int>(n));
    std::vector<RpCertPtr> comps;
    std::string provenance = "replace[" + tmpl.str() + "](";
    int base = 0;
    const int center_order = template_center;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const Graph& part = components[i].graph;
        for (auto [u, v] : part.edges()) g.add_edge(base + u, base + v);
        if (i > 0)
            for (int u = 0; u < center_order; ++u)
                for (int v = 0; v < part.order(); ++v) g.add_edge(u, base + v);
        std::vector<int> map(static_cast<std::size_t>(part.order()));
        std::iota(map.begin(), map.end(), base);
        comps.push_back(relabel_certificate(components[i].certificate, map));
        if (i) provenance += i == 1 ? "" : ",";
        if (i) provenance += components[i].provenance.empty() ? "?" : components[i].provenance;
        base += part.order();
    }
    provenance += ")";

    ConstructionResult r;
    r.graph = std::move(g);
    r.provenance = std::move(provenance);
    r.certificate = RpCertificate::make_replacement(template_center, template_leaves,
                                                    sig_result.certificate, std::move(comps));
    return r;
}

ConstructionResult build_corollary_family(int s, int j, SemistarSolver& signatures, RpSolver& solver) {
    if (s < 1 || j < 1) throw construction_error("corollary family needs s >= 1 and j >= 1");
    if (s == 1) {
        ConstructionResult r;
        r.graph = build_tripode(1, 1, 2 * j);
        auto rp = solver.is_rp(r.graph); // T(1,1,even) is RP; may throw budget_error for large j
        if (!rp.verdict) throw construction_error("internal: T(1,1," + std::to_string(2 * j) + ") not RP");
        r.certificate = rp.certificate;
        r.provenance = "T(1,1," + std::to_string(2 * j) + ")";
        r.designated_cut = VertexSet::of({0}, r.graph.order());
        return r;
    }
    if (s == 2) {
        // Canonical entry order makes the output literally realize(K2(1,1,2,6,j)).
        SemistarSignature sig(2, {1, 1, 2, 6, j});
        std::vector<ConstructionResult> comps;
        comps.push_back(clique_construction(2));
        for (int b : sig.leaves()) comps.push_back(clique_construction(b));
        auto r = build_replacement(2, sig.leaves(), comps, signatures);
        r.provenance = sig.str();
        r.designated_cut = VertexSet::of({0, 1}, r.graph.order());
        return r;
    }
    auto inner = build_corollary_family(s - 2, j, signatures, solver);
    const int m = inner.graph.order();
    std::vector<ConstructionResult> comps;
    comps.push_back(clique_construction(2));
    for (int b : {1, 1, 2, 6}) comps.push_back(clique_construction(b));
    comps.push_back(inner);
    auto r = build_replacement(2, {1, 1, 2, 6, m}, comps, signatures);
    r.provenance = "H" + std::to_string(s) + "(" + std::to_string(j) + ") = K2 + (K1 u K1 u K2 u K6 u " +
                   inner.provenance + ")";
    // Cut: the outer center pair plus the inner designated cut, shifted past
    // the 12 outer vertices (2 center + 1 + 1 + 2 + 6 leaves).
    std::uint64_t cut = 0b11;
    if (inner.designated_cut) cut |= inner.designated_cut->bits << 12;
    r.designated_cut = VertexSet::from_mask(cut, r.graph.order());
    return r;
}

namespace {

struct ExprParser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error("graph expression '" + std::string(text) + "': " + msg, 1,
                          static_cast<int>(pos) + 1);
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    int read_int() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
    std::vector<int> read_int_list() {
        expect('(');
        std::vector<int> out;
        skip_ws();
        if (eat(')')) return out;
        while (true) {
            out.push_back(read_int());
            if (eat(',')) continue;
            expect(')');
            break;
        }
        return out;
    }

    Graph parse_expr() {
        skip_ws();
        if (text.compare(pos, 5, "join(") == 0) {
            pos += 4;
            expect('(');
            std::vector<ConstructionResult> parts;
            while (true) {
                ConstructionResult part;
                part.graph = parse_expr();
                parts.push_back(std::move(part));
                if (eat(',')) continue;
                expect(')');
                break;
            }
            return sequential_join(parts).graph;
        }
        if (text.compare(pos, 2, "KM") == 0) {
            pos += 2;
            auto sizes = read_int_list();
            return build_complete_multipartite(sizes);
        }
        if (text.compare(pos, 2, "Kn") == 0) {
            pos += 2;
            return build_clique(read_int());
        }
        if (pos < text.size() && text[pos] == 'K') {
            ++pos;
            const int b0 = read_int();
            auto leaves = read_int_list();
            return realize(SemistarSignature(b0, std::move(leaves)));
        }
        if (pos < text.size() && text[pos] == 'T') {
            ++pos;
            auto legs = read_int_list();
            if (legs.size() != 3) fail("tripode takes exactly three legs");
            return build_tripode(legs[0], legs[1], legs[2]);
        }
        if (pos < text.size() && text[pos] == 'B') {
            ++pos;
            return build_balloon(read_int_list());
        }
        if (pos < text.size() && text[pos] == 'P') {
            ++pos;
            return build_path(read_int());
        }
        if (pos < text.size() && text[pos] == 'C') {
            ++pos;
            return build_cycle(read_int());
        }
        if (pos < text.size() && text[pos] == 'H') {
            ++pos;
            auto args = read_int_list();
            if (args.size() != 2) fail("H takes (s,j)");
            SemistarSolver signatures;
            RpSolver solver;
            return build_corollary_family(args[0], args[1], signatures, solver).graph;
        }
        fail("unknown family");
    }

    Graph parse_all() {
        Graph g = parse_expr();
        skip_ws();
        if (pos != text.size()) fail("trailing characters");
        return g;
    }
};

} // namespace

Graph parse_graph_expr(std::string_view text) {
    ExprParser p{text};
    return p.parse_all();
}

} // namespace rp
