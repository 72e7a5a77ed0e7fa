#include "rp/paper_tables.hpp"

#include "rp/conditions.hpp"
#include "rp/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

namespace rp {

bool TripleRule::admits(int c) const {
    if (is_set) return std::find(values.begin(), values.end(), c) != values.end();
    return std::find(residues.begin(), residues.end(), c % mod) != residues.end();
}

namespace {

std::vector<int> parse_csv_ints(const std::string& text, int lineno) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (...) {
            throw parse_error("expected comma-separated integers, got '" + text + "'", lineno, 1);
        }
    }
    if (out.empty()) throw parse_error("expected comma-separated integers", lineno, 1);
    return out;
}

} // namespace

PaperTables load_paper_tables_stream(std::istream& in, const std::string& name) {
    PaperTables out;
    std::string line;
    int lineno = 0;
    PaperTable* current = nullptr;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "rule") {
            TripleRule rule;
            std::string kind, payload;
            if (!(ls >> rule.b >> kind >> payload))
                throw parse_error(name + ": rule needs '<b> mod|set <list>'", lineno, 1);
            if (kind == "mod") {
                // payload is "<m>"; the residue list follows as one more token
                rule.mod = std::stoi(payload);
                std::string residues;
                if (!(ls >> residues))
                    throw parse_error(name + ": rule mod needs residues", lineno, 1);
                rule.residues = parse_csv_ints(residues, lineno);
                rule.is_set = false;
            } else if (kind == "set") {
                rule.values = parse_csv_ints(payload, lineno);
                rule.is_set = true;
            } else {
                throw parse_error(name + ": unknown rule kind '" + kind + "'", lineno, 1);
            }
            out.triple_rules.push_back(std::move(rule));
        } else if (tag == "sporadic") {
            std::string payload;
            if (!(ls >> payload)) throw parse_error(name + ": sporadic needs a triple", lineno, 1);
            out.sporadic = parse_csv_ints(payload, lineno);
        } else if (tag == "table") {
            PaperTable table;
            std::string parent;
            if (!(ls >> table.id >> parent))
                throw parse_error(name + ": table needs '<id> <parent-signature>'", lineno, 1);
            try {
                auto [center, leaves] = SemistarSignature::parse_entries(parent);
                table.parent_center = center;
                table.parent_leaves = std::move(leaves);
            } catch (const parse_error& e) {
                throw parse_error(name + ": " + e.what(), lineno, 1);
            }
            out.tables.push_back(std::move(table));
            current = &out.tables.back();
        } else if (tag == "row") {
            if (!current) throw parse_error(name + ": row before any table", lineno, 1);
            PaperTableRow row;
            std::string a, b;
            if (!(ls >> row.lambda >> a >> b))
                throw parse_error(name + ": row needs '<lambda> <partA> <partB>'", lineno, 1);
            try {
                auto [ac, al] = SemistarSignature::parse_entries(a);
                auto [bc, bl] = SemistarSignature::parse_entries(b);
                row.a_center = ac;
                row.a_leaves = std::move(al);
                row.b_center = bc;
                row.b_leaves = std::move(bl);
            } catch (const parse_error& e) {
                throw parse_error(name + ": " + e.what(), lineno, 1);
            }
            current->rows.push_back(std::move(row));
        } else {
            throw parse_error(name + ": unknown record '" + tag + "'", lineno, 1);
        }
    }
    return out;
}

PaperTables load_paper_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open table data file '" + path + "'");
    return load_paper_tables_stream(in, path);
}

std::string default_paper_tables_path() {
    if (const char* env = std::getenv("RP_TABLES_FILE")) return env;
#ifdef RP_SOURCE_DIR
    return std::string(RP_SOURCE_DIR) + "/data/paper_tables.txt";
#else
    return "data/paper_tables.txt";
#endif
}

RunReport verify_paper_tables(const PaperTables& tables, SemistarSolver& solver) {
    RunReport report;
    report.suite = "tables";

    // Triple rules against the code-level table, well past the sporadic sets.
    for (const auto& rule : tables.triple_rules) {
        const std::string id = "table1/b=" + std::to_string(rule.b);
        bool match = true;
        int bad_c = -1;
        for (int c = rule.b; c <= 200 && match; ++c)
            if (rule.admits(c) != rp_triple(1, rule.b, c)) {
                match = false;
                bad_c = c;
            }
        if (match)
            report.ok(id);
        else
            report.fail(id, "data rule disagrees with the code table at c=" + std::to_string(bad_c),
                        "rptool conditions treerp \"T(1," + std::to_string(rule.b) + "," +
                            std::to_string(bad_c) + ")\"");
    }
    {
        // Rules must exist exactly for b = 1..6; everything above is excluded.
        std::vector<int> bs;
        for (const auto& r : tables.triple_rules) bs.push_back(r.b);
        std::sort(bs.begin(), bs.end());
        if (bs == std::vector<int>{1, 2, 3, 4, 5, 6})
            report.ok("table1/rule-coverage");
        else
            report.fail("table1/rule-coverage", "expected rules for b = 1..6");
        bool beyond = true;
        for (int b = 7; b <= 40 && beyond; ++b)
            for (int c = b; c <= 80 && beyond; ++c)
                if (rp_triple(1, b, c)) beyond = false;
        if (beyond)
            report.ok("table1/excluded-beyond-b6");
        else
            report.fail("table1/excluded-beyond-b6", "code table admits a (1,b,c) with b > 6");
    }
    if (tables.sporadic == std::vector<int>{2, 4, 6} && rp_triple(2, 4, 6))
        report.ok("table1/sporadic");
    else
        report.fail("table1/sporadic", "sporadic triple is not (2,4,6)");

    for (const auto& table : tables.tables) {
        const std::string tid = "table" + std::to_string(table.id);
        const int parent_order =
            table.parent_center +
            std::accumulate(table.parent_leaves.begin(), table.parent_leaves.end(), 0);
        std::vector<bool> seen(static_cast<std::size_t>(parent_order / 2) + 1, false);
        for (const auto& row : table.rows) {
            const std::string rid = tid + "/lambda" + std::to_string(row.lambda);
            std::string err;
            if (row.lambda < 1 || row.lambda > parent_order / 2)
                err = "lambda out of range 1..floor(n/2)";
            else if (seen[static_cast<std::size_t>(row.lambda)])
                err = "duplicate lambda";
            else if (row.a_leaves.size() != table.parent_leaves.size() ||
                     row.b_leaves.size() != table.parent_leaves.size())
                err = "arity mismatch with the parent signature";
            else if (row.a_center + row.b_center != table.parent_center)
                err = "center entries do not sum to the parent center";
            if (err.empty()) {
                seen[static_cast<std::size_t>(row.lambda)] = true;
                for (std::size_t i = 0; i < table.parent_leaves.size() && err.empty(); ++i)
                    if (row.a_leaves[i] + row.b_leaves[i] != table.parent_leaves[i])
                        err = "leaf entries do not sum to the parent at position " + std::to_string(i);
            }
            if (err.empty()) {
                const int asum = row.a_center +
                                 std::accumulate(row.a_leaves.begin(), row.a_leaves.end(), 0);
                if (asum != row.lambda) err = "|A| = " + std::to_string(asum) + " differs from lambda";
            }
            SemistarSignature a, b;
            if (err.empty()) {
                a = SemistarSignature(row.a_center, row.a_leaves);
                b = SemistarSignature(row.b_center, row.b_leaves);
                if (!solver.is_rp(a))
                    err = "part A " + a.str() + " is not RP";
                else if (!solver.is_rp(b))
                    err = "part B " + b.str() + " is not RP";
            }
            if (err.empty())
                report.ok(rid);
            else
                report.fail(rid, err,
                            "rptool semistar check \"" + a.str() + "\" / \"" + b.str() + "\"");
        }
        bool complete = true;
        for (int lambda = 1; lambda <= parent_order / 2; ++lambda)
            if (!seen[static_cast<std::size_t>(lambda)]) complete = false;
        if (complete)
            report.ok(tid + "/coverage");
        else
            report.fail(tid + "/coverage", "rows do not cover lambda = 1..floor(n/2)");
    }
    return report;
}

} // namespace rp
