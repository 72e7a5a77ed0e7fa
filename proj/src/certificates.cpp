#include "rp/certificates.hpp"

#include <bit>
#include <numeric>

namespace rp {

std::uint64_t RpCertificate::covered() const {
    switch (kind) {
    case Kind::singleton:
        return std::uint64_t{1} << singleton_vertex;
    case Kind::path: {
        std::uint64_t m = 0;
        for (int v : path_order) m |= std::uint64_t{1} << v;
        return m;
    }
    case Kind::split:
        return split_vertices;
    case Kind::join:
    case Kind::replacement: {
        std::uint64_t m = 0;
        for (const auto& c : children) m |= c->covered();
        return m;
    }
    }
    return 0;
}

RpCertPtr RpCertificate::make_singleton(int v) {
    auto c = std::make_shared<RpCertificate>();
    c->kind = Kind::singleton;
    c->singleton_vertex = v;
    return c;
}

RpCertPtr RpCertificate::make_path(std::vector<int> order) {
    auto c = std::make_shared<RpCertificate>();
    c->kind = Kind::path;
    c->path_order = std::move(order);
    return c;
}

RpCertPtr RpCertificate::make_split(std::uint64_t vertices, std::vector<RpSplitEntry> entries) {
    auto c = std::make_shared<RpCertificate>();
    c->kind = Kind::split;
    c->split_vertices = vertices;
    c->split_entries = std::move(entries);
    return c;
}

RpCertPtr RpCertificate::make_join(std::vector<RpCertPtr> blocks) {
    auto c = std::make_shared<RpCertificate>();
    c->kind = Kind::join;
    c->children = std::move(blocks);
    return c;
}

RpCertPtr RpCertificate::make_replacement(int template_center, std::vector<int> template_leaves,
                                          std::shared_ptr<const SignatureCertificate> template_cert,
                                          std::vector<RpCertPtr> components) {
    auto c = std::make_shared<RpCertificate>();
    c->kind = Kind::replacement;
    c->template_center = template_center;
    c->template_leaves = std::move(template_leaves);
    c->template_certificate = std::move(template_cert);
    c->children = std::move(components);
    return c;
}

RpCertPtr relabel_certificate(const RpCertPtr& cert, const std::vector<int>& map) {
    if (!cert) return nullptr;
    auto out = std::make_shared<RpCertificate>(*cert);
    auto map_mask = [&](std::uint64_t bits) {
        std::uint64_t m = 0;
        for (std::uint64_t b = bits; b; b &= b - 1)
            m |= std::uint64_t{1} << map[static_cast<std::size_t>(std::countr_zero(b))];
        return m;
    };
    switch (cert->kind) {
    case RpCertificate::Kind::singleton:
        out->singleton_vertex = map[static_cast<std::size_t>(cert->singleton_vertex)];
        break;
    case RpCertificate::Kind::path:
        for (auto& v : out->path_order) v = map[static_cast<std::size_t>(v)];
        break;
    case RpCertificate::Kind::split:
        out->split_vertices = map_mask(cert->split_vertices);
        for (std::size_t i = 0; i < out->split_entries.size(); ++i) {
            out->split_entries[i].part_a = map_mask(cert->split_entries[i].part_a);
            out->split_entries[i].cert_a = relabel_certificate(cert->split_entries[i].cert_a, map);
            out->split_entries[i].cert_b = relabel_certificate(cert->split_entries[i].cert_b, map);
        }
        break;
    case RpCertificate::Kind::join:
    case RpCertificate::Kind::replacement:
        for (auto& c : out->children) c = relabel_certificate(c, map);
        break;
    }
    return out;
}

namespace {

struct Verifier {
    const Graph& g;
    bool theorem_backed = false;
    std::string failure;

    bool fail(const std::string& where, const std::string& why) {
        failure = where + ": " + why;
        return false;
    }

    bool in_range(std::uint64_t set) const { return (set & ~g.vertex_mask()) == 0; }

    bool check(const RpCertificate& c, std::uint64_t expected, const std::string& where) {
        if (!expected) return fail(where, "empty vertex set");
        if (!in_range(expected)) return fail(where, "vertex out of range");
        switch (c.kind) {
        case RpCertificate::Kind::singleton: {
            const std::uint64_t bit = std::uint64_t{1} << c.singleton_vertex;
            if (c.singleton_vertex < 0 || c.singleton_vertex >= g.order())
                return fail(where, "singleton vertex out of range");
            if (bit != expected) return fail(where, "singleton does not cover the node's vertex set");
            return true;
        }
        case RpCertificate::Kind::path: {
            std::uint64_t seen = 0;
            for (std::size_t i = 0; i < c.path_order.size(); ++i) {
                const int v = c.path_order[i];
                if (v < 0 || v >= g.order()) return fail(where, "path vertex out of range");
                const std::uint64_t bit = std::uint64_t{1} << v;
                if (seen & bit) return fail(where, "repeated path vertex " + std::to_string(v));
                seen |= bit;
                if (i > 0 && !g.has_edge(c.path_order[i - 1], v))
                    return fail(where, "non-adjacent consecutive pair (" +
                                           std::to_string(c.path_order[i - 1]) + "," + std::to_string(v) + ")");
            }
            if (seen != expected) return fail(where, "path does not cover the node's vertex set");
            return true;
        }
        case RpCertificate::Kind::split: {
            if (c.split_vertices != expected)
                return fail(where, "split node set does not match the expected set");
            const int n = std::popcount(expected);
            if (n < 2) return fail(where, "split node needs at least 2 vertices");
            if (!g.connected_within(expected)) return fail(where, "split node set is disconnected");
            std::vector<bool> covered_a(static_cast<std::size_t>(n / 2) + 1, false);
            for (std::size_t i = 0; i < c.split_entries.size(); ++i) {
                const auto& e = c.split_entries[i];
                const std::string ew = where + "/a=" + std::to_string(e.size_a);
                if (e.size_a < 1 || e.size_a > n / 2) return fail(ew, "size out of range");
                if (covered_a[static_cast<std::size_t>(e.size_a)]) return fail(ew, "duplicate size entry");
                covered_a[static_cast<std::size_t>(e.size_a)] = true;
                if ((e.part_a & ~expected) != 0) return fail(ew, "A-part leaves the node's set");
                if (std::popcount(e.part_a) != e.size_a) return fail(ew, "|A| does not equal a");
                if (!e.cert_a || !e.cert_b) return fail(ew, "missing child certificate");
                if (!check(*e.cert_a, e.part_a, ew + "/A")) return false;
                if (!check(*e.cert_b, expected & ~e.part_a, ew + "/B")) return false;
            }
            for (int a = 1; a <= n / 2; ++a)
                if (!covered_a[static_cast<std::size_t>(a)])
                    return fail(where, "no entry for a=" + std::to_string(a));
            return true;
        }
        case RpCertificate::Kind::join: {
            theorem_backed = true;
            if (c.children.empty()) return fail(where, "join node with no blocks");
            std::uint64_t seen = 0;
            std::vector<std::uint64_t> blocks;
            for (std::size_t i = 0; i < c.children.size(); ++i) {
                if (!c.children[i]) return fail(where, "missing join block certificate");
                const std::uint64_t b = c.children[i]->covered();
                if (b & seen) return fail(where, "join blocks overlap");
                seen |= b;
                blocks.push_back(b);
            }
            if (seen != expected) return fail(where, "join blocks do not cover the node's set");
            for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
                for (std::uint64_t ub = blocks[i]; ub; ub &= ub - 1) {
                    const int u = std::countr_zero(ub);
                    if ((g.neighbors(u) & blocks[i + 1]) != blocks[i + 1])
                        return fail(where, "consecutive blocks " + std::to_string(i) + "," +
                                               std::to_string(i + 1) + " not fully joined in g");
                }
            for (std::size_t i = 0; i < c.children.size(); ++i)
                if (!check(*c.children[i], blocks[i], where + "/block" + std::to_string(i)))
                    return false;
            return true;
        }
        case RpCertificate::Kind::replacement: {
            theorem_backed = true;
            if (c.template_center < 1) return fail(where, "template center must be positive");
            if (c.template_leaves.empty()) return fail(where, "template has no leaf entries");
            for (int b : c.template_leaves)
                if (b < 1) return fail(where, "template leaf entries must be positive");
            if (c.children.size() != c.template_leaves.size() + 1)
                return fail(where, "component count does not match template arity");
            if (!c.template_certificate) return fail(where, "missing template signature certificate");
            SemistarSignature tmpl(c.template_center, c.template_leaves);
            const auto sig_check = verify_signature_certificate(tmpl, *c.template_certificate);
            if (!sig_check.valid)
                return fail(where, "template certificate invalid: " + sig_check.failure_reason);
            std::uint64_t seen = 0;
            std::vector<std::uint64_t> blocks;
            for (std::size_t i = 0; i < c.children.size(); ++i) {
                if (!c.children[i]) return fail(where, "missing component certificate");
                const std::uint64_t b = c.children[i]->covered();
                const int want = i == 0 ? c.template_center : c.template_leaves[i - 1];
                if (std::popcount(b) != want)
                    return fail(where, "component " + std::to_string(i) + " order " +
                                           std::to_string(std::popcount(b)) + " does not match template entry " +
                                           std::to_string(want));
                if (b & seen) return fail(where, "components overlap");
                seen |= b;
                blocks.push_back(b);
            }
            if (seen != expected) return fail(where, "components do not cover the node's set");
            // Join structure: the center block is fully joined to every leaf block.
            for (std::uint64_t ub = blocks[0]; ub; ub &= ub - 1) {
                const int u = std::countr_zero(ub);
                const std::uint64_t others = expected & ~blocks[0];
                if ((g.neighbors(u) & others) != others)
                    return fail(where, "center block not fully joined to the leaf blocks in g");
            }
            for (std::size_t i = 0; i < c.children.size(); ++i)
                if (!check(*c.children[i], blocks[i], where + "/component" + std::to_string(i)))
                    return false;
            return true;
        }
        }
        return fail(where, "unknown node kind");
    }
};

} // namespace

CertVerifyResult verify_certificate(const Graph& g, const RpCertificate& cert) {
    Verifier v{g, false, {}};
    const bool ok = v.check(cert, g.vertex_mask(), "root");
    CertVerifyResult out;
    out.valid = ok;
    out.tier = v.theorem_backed ? CertTier::theorem_backed : CertTier::elementary;
    out.failure_reason = ok ? "" : v.failure;
    return out;
}

} // namespace rp
