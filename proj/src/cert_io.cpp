#include "rp/cert_io.hpp"

#include "rp/errors.hpp"

#include <json.hpp>

#include <bit>

namespace rp {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json mask_to_array(std::uint64_t mask) {
    ordered_json arr = ordered_json::array();
    for (std::uint64_t b = mask; b; b &= b - 1) arr.push_back(std::countr_zero(b));
    return arr;
}

ordered_json sig_cert_to_json(const SignatureCertificate& cert) {
    ordered_json j;
    j["root"] = cert.root.str();
    ordered_json nodes = ordered_json::array();
    for (const auto& [sig, node] : cert.nodes) {
        ordered_json nj;
        nj["sig"] = sig.str();
        nj["kind"] = node.clique ? "clique" : "split";
        if (!node.clique) {
            ordered_json entries = ordered_json::array();
            for (const auto& e : node.entries) {
                ordered_json ej;
                ej["lambda"] = e.lambda;
                ej["x_center"] = e.x_center;
                ej["x_leaves"] = e.x_leaves;
                entries.push_back(std::move(ej));
            }
            nj["entries"] = std::move(entries);
        }
        nodes.push_back(std::move(nj));
    }
    j["nodes"] = std::move(nodes);
    return j;
}

ordered_json cert_to_json(const RpCertificate& c) {
    ordered_json j;
    switch (c.kind) {
    case RpCertificate::Kind::singleton:
        j["kind"] = "singleton";
        j["vertex"] = c.singleton_vertex;
        break;
    case RpCertificate::Kind::path:
        j["kind"] = "path";
        j["order"] = c.path_order;
        break;
    case RpCertificate::Kind::split: {
        j["kind"] = "split";
        j["vertices"] = mask_to_array(c.split_vertices);
        ordered_json entries = ordered_json::array();
        for (const auto& e : c.split_entries) {
            ordered_json ej;
            ej["a"] = e.size_a;
            ej["part_a"] = mask_to_array(e.part_a);
            ej["cert_a"] = e.cert_a ? cert_to_json(*e.cert_a) : ordered_json(nullptr);
            ej["cert_b"] = e.cert_b ? cert_to_json(*e.cert_b) : ordered_json(nullptr);
            entries.push_back(std::move(ej));
        }
        j["entries"] = std::move(entries);
        break;
    }
    case RpCertificate::Kind::join: {
        j["kind"] = "join";
        ordered_json kids = ordered_json::array();
        for (const auto& ch : c.children) kids.push_back(ch ? cert_to_json(*ch) : ordered_json(nullptr));
        j["children"] = std::move(kids);
        break;
    }
    case RpCertificate::Kind::replacement: {
        j["kind"] = "replacement";
        j["template_center"] = c.template_center;
        j["template_leaves"] = c.template_leaves;
        j["template_certificate"] =
            c.template_certificate ? sig_cert_to_json(*c.template_certificate) : ordered_json(nullptr);
        ordered_json kids = ordered_json::array();
        for (const auto& ch : c.children) kids.push_back(ch ? cert_to_json(*ch) : ordered_json(nullptr));
        j["components"] = std::move(kids);
        break;
    }
    }
    return j;
}

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
    throw parse_error("certificate schema violation at " + path + ": " + msg);
}

int get_int(const ordered_json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_fail(path, "expected an integer");
    return j.get<int>();
}

std::vector<int> get_int_array(const ordered_json& j, const std::string& path, int min_value) {
    if (!j.is_array()) schema_fail(path, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const int v = get_int(j[i], path + "/" + std::to_string(i));
        if (v < min_value) schema_fail(path + "/" + std::to_string(i), "value below " + std::to_string(min_value));
        out.push_back(v);
    }
    return out;
}

std::uint64_t array_to_mask(const ordered_json& j, const std::string& path) {
    std::uint64_t mask = 0;
    for (int v : get_int_array(j, path, 0)) {
        if (v >= 64) schema_fail(path, "vertex " + std::to_string(v) + " out of the 64-vertex range");
        mask |= std::uint64_t{1} << v;
    }
    return mask;
}

const ordered_json& need(const ordered_json& j, const char* field, const std::string& path) {
    if (!j.is_object()) schema_fail(path, "expected an object");
    auto it = j.find(field);
    if (it == j.end()) schema_fail(path, std::string("missing field '") + field + "'");
    return *it;
}

std::shared_ptr<const SignatureCertificate> sig_cert_from_json(const ordered_json& j, const std::string& path) {
    auto cert = std::make_shared<SignatureCertificate>();
    const auto& root = need(j, "root", path);
    if (!root.is_string()) schema_fail(path + "/root", "expected a signature string");
    try {
        cert->root = SemistarSignature::parse(root.get<std::string>());
    } catch (const parse_error& e) {
        schema_fail(path + "/root", e.what());
    }
    const auto& nodes = need(j, "nodes", path);
    if (!nodes.is_array()) schema_fail(path + "/nodes", "expected an array");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::string npath = path + "/nodes/" + std::to_string(i);
        const auto& nj = nodes[i];
        SemistarSignature sig;
        try {
            const auto& s = need(nj, "sig", npath);
            if (!s.is_string()) schema_fail(npath + "/sig", "expected a signature string");
            sig = SemistarSignature::parse(s.get<std::string>());
        } catch (const parse_error& e) {
            schema_fail(npath + "/sig", e.what());
        }
        const auto& kind = need(nj, "kind", npath);
        if (!kind.is_string()) schema_fail(npath + "/kind", "expected a string");
        SignatureCertificate::Node node;
        const std::string k = kind.get<std::string>();
        if (k == "clique") {
            node.clique = true;
        } else if (k == "split") {
            const auto& entries = need(nj, "entries", npath);
            if (!entries.is_array()) schema_fail(npath + "/entries", "expected an array");
            for (std::size_t e = 0; e < entries.size(); ++e) {
                const std::string epath = npath + "/entries/" + std::to_string(e);
                SigSplitEntry entry;
                entry.lambda = get_int(need(entries[e], "lambda", epath), epath + "/lambda");
                entry.x_center = get_int(need(entries[e], "x_center", epath), epath + "/x_center");
                entry.x_leaves = get_int_array(need(entries[e], "x_leaves", epath), epath + "/x_leaves", 0);
                node.entries.push_back(std::move(entry));
            }
        } else {
            schema_fail(npath + "/kind", "unknown kind '" + k + "'");
        }
        if (!cert->nodes.emplace(std::move(sig), std::move(node)).second)
            schema_fail(npath, "duplicate signature node");
    }
    return cert;
}

RpCertPtr cert_from_json(const ordered_json& j, const std::string& path) {
    const auto& kind = need(j, "kind", path);
    if (!kind.is_string()) schema_fail(path + "/kind", "expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "singleton") {
        const int v = get_int(need(j, "vertex", path), path + "/vertex");
        if (v < 0 || v >= 64) schema_fail(path + "/vertex", "vertex out of the 64-vertex range");
        return RpCertificate::make_singleton(v);
    }
    if (k == "path") {
        auto order = get_int_array(need(j, "order", path), path + "/order", 0);
        for (int v : order)
            if (v >= 64) schema_fail(path + "/order", "vertex out of the 64-vertex range");
        return RpCertificate::make_path(std::move(order));
    }
    if (k == "split") {
        const std::uint64_t vertices = array_to_mask(need(j, "vertices", path), path + "/vertices");
        const auto& entries = need(j, "entries", path);
        if (!entries.is_array()) schema_fail(path + "/entries", "expected an array");
        std::vector<RpSplitEntry> rows;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const std::string epath = path + "/entries/" + std::to_string(i);
            RpSplitEntry row;
            row.size_a = get_int(need(entries[i], "a", epath), epath + "/a");
            row.part_a = array_to_mask(need(entries[i], "part_a", epath), epath + "/part_a");
            row.cert_a = cert_from_json(need(entries[i], "cert_a", epath), epath + "/cert_a");
            row.cert_b = cert_from_json(need(entries[i], "cert_b", epath), epath + "/cert_b");
            rows.push_back(std::move(row));
        }
        return RpCertificate::make_split(vertices, std::move(rows));
    }
    if (k == "join") {
        const auto& kids = need(j, "children", path);
        if (!kids.is_array()) schema_fail(path + "/children", "expected an array");
        std::vector<RpCertPtr> children;
        for (std::size_t i = 0; i < kids.size(); ++i)
            children.push_back(cert_from_json(kids[i], path + "/children/" + std::to_string(i)));
        return RpCertificate::make_join(std::move(children));
    }
    if (k == "replacement") {
        const int center = get_int(need(j, "template_center", path), path + "/template_center");
        auto leaves = get_int_array(need(j, "template_leaves", path), path + "/template_leaves", 0);
        auto tcert = sig_cert_from_json(need(j, "template_certificate", path), path + "/template_certificate");
        const auto& kids = need(j, "components", path);
        if (!kids.is_array()) schema_fail(path + "/components", "expected an array");
        std::vector<RpCertPtr> children;
        for (std::size_t i = 0; i < kids.size(); ++i)
            children.push_back(cert_from_json(kids[i], path + "/components/" + std::to_string(i)));
        return RpCertificate::make_replacement(center, std::move(leaves), std::move(tcert),
                                               std::move(children));
    }
    schema_fail(path + "/kind", "unknown kind '" + k + "'");
}

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("certificate JSON: ") + e.what());
    }
}

void check_version(const ordered_json& j) {
    const auto& v = need(j, "version", "/");
    if (!v.is_number_integer() || v.get<int>() != 1)
        schema_fail("/version", "unsupported certificate schema version");
}

} // namespace

std::string serialize_certificate(const RpCertificate& cert) {
    ordered_json j;
    j["version"] = 1;
    ordered_json body = cert_to_json(cert);
    for (auto& [key, value] : body.items()) j[key] = value;
    return j.dump(2) + "\n";
}

RpCertPtr parse_certificate(const std::string& text) {
    const ordered_json j = parse_json(text);
    check_version(j);
    return cert_from_json(j, "/");
}

std::string serialize_signature_certificate(const SignatureCertificate& cert) {
    ordered_json j;
    j["version"] = 1;
    ordered_json body = sig_cert_to_json(cert);
    for (auto& [key, value] : body.items()) j[key] = value;
    return j.dump(2) + "\n";
}

std::shared_ptr<const SignatureCertificate> parse_signature_certificate(const std::string& text) {
    const ordered_json j = parse_json(text);
    check_version(j);
    return sig_cert_from_json(j, "/");
}

} // namespace rp
