#include "rp/graph.hpp"

#include "rp/errors.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rp {

int VertexSet::size() const {
    return std::popcount(bits);
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

std::string VertexSet::str() const {
    std::string out = "{";
    bool first = true;
    for (int v : to_vector()) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

VertexSet VertexSet::of(std::initializer_list<int> vs, int parent_n) {
    VertexSet s{0, parent_n};
    for (int v : vs) s.bits |= std::uint64_t{1} << v;
    return s;
}

VertexSet VertexSet::from_vector(const std::vector<int>& vs, int parent_n) {
    VertexSet s{0, parent_n};
    for (int v : vs) s.bits |= std::uint64_t{1} << v;
    return s;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > max_order)
        throw std::invalid_argument("graph order must be in 1.." + std::to_string(max_order) +
                                    ", got " + std::to_string(n));
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for n=" + std::to_string(n));
        g.add_edge(u, v);
    }
    return g;
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

bool Graph::has_edge(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    ++m_;
}

int Graph::degree(int v) const {
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

bool Graph::is_complete() const {
    return m_ == n_ * (n_ - 1) / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (std::uint64_t b = adj_[static_cast<std::size_t>(u)] >> u >> 1; b; b &= b - 1)
            out.emplace_back(u, u + 1 + std::countr_zero(b));
    return out;
}

Graph Graph::induced(const VertexSet& s) const {
    if (s.empty()) throw std::invalid_argument("induced subgraph on empty vertex set");
    return induced_mask(s.bits);
}

Graph Graph::induced_mask(std::uint64_t s) const {
    if (!s) throw std::invalid_argument("induced subgraph on empty vertex set");
    std::vector<int> label(static_cast<std::size_t>(n_), -1);
    int k = 0;
    for (std::uint64_t b = s; b; b &= b - 1) label[static_cast<std::size_t>(std::countr_zero(b))] = k++;
    Graph out(k);
    for (std::uint64_t b = s; b; b &= b - 1) {
        const int u = std::countr_zero(b);
        for (std::uint64_t nb = adj_[static_cast<std::size_t>(u)] & s; nb; nb &= nb - 1) {
            const int v = std::countr_zero(nb);
            if (v > u) out.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
        }
    }
    return out;
}

std::uint64_t Graph::closure_from(int seed, std::uint64_t within) const {
    std::uint64_t comp = std::uint64_t{1} << seed;
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b; b &= b - 1)
            next |= adj_[static_cast<std::size_t>(std::countr_zero(b))];
        frontier = next & within & ~comp;
        comp |= frontier;
    }
    return comp;
}

bool Graph::is_connected() const {
    return connected_within(vertex_mask());
}

bool Graph::connected_within(std::uint64_t s) const {
    if (!s) throw std::invalid_argument("connected_within on empty set");
    return closure_from(std::countr_zero(s), s) == s;
}

std::vector<VertexSet> Graph::components(const VertexSet& removed) const {
    const std::uint64_t rest = vertex_mask() & ~removed.bits;
    if (!rest) throw std::invalid_argument("components: removed set covers all vertices");
    return components_within(rest);
}

std::vector<VertexSet> Graph::components_within(std::uint64_t s) const {
    std::vector<VertexSet> out;
    std::uint64_t rest = s;
    while (rest) {
        const std::uint64_t comp = closure_from(std::countr_zero(rest), rest);
        out.push_back(VertexSet{comp, n_});
        rest &= ~comp;
    }
    return out;
}

int Graph::component_count_within(std::uint64_t s) const {
    int count = 0;
    std::uint64_t rest = s;
    while (rest) {
        rest &= ~closure_from(std::countr_zero(rest), rest);
        ++count;
    }
    return count;
}

std::vector<int> Graph::component_sizes_within(std::uint64_t s) const {
    std::vector<int> out;
    std::uint64_t rest = s;
    while (rest) {
        const std::uint64_t comp = closure_from(std::countr_zero(rest), rest);
        out.push_back(std::popcount(comp));
        rest &= ~comp;
    }
    return out;
}

Graph Graph::read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag)) continue; // blank line before header
            int count = 0;
            if (tag != "n" || !(ls >> count))
                throw parse_error("expected header line 'n <count>'", lineno, 1);
            n = count;
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue; // blank line
        if (!(ls >> v)) throw parse_error("expected 'u v' pair", lineno, 1);
        edges.emplace_back(u, v);
    }
    if (n < 0) throw parse_error("missing 'n <count>' header", lineno, 1);
    if (n < 1 || n > max_order)
        throw parse_error("vertex count out of range 1..64: " + std::to_string(n), 1, 1);
    try {
        return from_edge_list(n, edges);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), 0, 0);
    }
}

void Graph::write_edge_list(std::ostream& out) const {
    out << "n " << n_ << "\n";
    for (auto [u, v] : edges()) out << u << " " << v << "\n";
}

} // namespace rp
