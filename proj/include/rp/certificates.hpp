#pragma once

#include "rp/graph.hpp"
#include "rp/semistar.hpp"

#include <memory>
#include <string>
#include <vector>

namespace rp {

struct RpCertificate;
using RpCertPtr = std::shared_ptr<const RpCertificate>;

// One row of a split node: for |A| = size_a, part_a induces an RP graph
// (witnessed by cert_a) and so does its complement (cert_b).
struct RpSplitEntry {
    int size_a = 0;
    std::uint64_t part_a = 0;
    RpCertPtr cert_a;
    RpCertPtr cert_b;
};

// Recursive RP witness. All vertex references are labels of the root graph
// the certificate was issued for. The elementary tier uses singleton, path
// and split nodes; join and replacement nodes are theorem-backed.
struct RpCertificate {
    enum class Kind { singleton, path, split, join, replacement };

    Kind kind = Kind::singleton;

    int singleton_vertex = 0;                 // singleton
    std::vector<int> path_order;              // path: spanning path of the node's set
    std::uint64_t split_vertices = 0;         // split
    std::vector<RpSplitEntry> split_entries;  // split: one row per a in 1..floor(n/2)
    std::vector<RpCertPtr> children;          // join (ordered blocks) / replacement components

    // replacement only: the template signature as given (pre-canonical,
    // positional) plus an RP witness for it.
    int template_center = 0;
    std::vector<int> template_leaves;
    std::shared_ptr<const SignatureCertificate> template_certificate;

    // Vertex set this node covers (derived).
    std::uint64_t covered() const;

    static RpCertPtr make_singleton(int v);
    static RpCertPtr make_path(std::vector<int> order);
    static RpCertPtr make_split(std::uint64_t vertices, std::vector<RpSplitEntry> entries);
    static RpCertPtr make_join(std::vector<RpCertPtr> blocks);
    static RpCertPtr make_replacement(int template_center, std::vector<int> template_leaves,
                                      std::shared_ptr<const SignatureCertificate> template_cert,
                                      std::vector<RpCertPtr> components);
};

// Deep copy with vertices mapped through map[old] = new.
RpCertPtr relabel_certificate(const RpCertPtr& cert, const std::vector<int>& map);

enum class CertTier { elementary, theorem_backed };

struct CertVerifyResult {
    bool valid = false;
    CertTier tier = CertTier::elementary;
    std::string failure_reason;
};

// Checks a certificate against g from first principles, without invoking any
// solver. Failures are reported, not thrown.
CertVerifyResult verify_certificate(const Graph& g, const RpCertificate& cert);

} // namespace rp
