#pragma once

#include "rp/report.hpp"
#include "rp/semistar.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rp {

// One cell family of the tripode triple table: (1,b,c) is admissible when c
// hits the residues mod `mod`, or when c is in `values`.
struct TripleRule {
    int b = 0;
    bool is_set = false;
    int mod = 0;
    std::vector<int> residues;
    std::vector<int> values;

    bool admits(int c) const;
};

// One split row: entry vectors are pre-canonical and aligned entrywise with
// the parent signature.
struct PaperTableRow {
    int lambda = 0;
    int a_center = 0;
    std::vector<int> a_leaves;
    int b_center = 0;
    std::vector<int> b_leaves;
};

struct PaperTable {
    int id = 0;
    int parent_center = 0;
    std::vector<int> parent_leaves;
    std::vector<PaperTableRow> rows;
};

struct PaperTables {
    std::vector<TripleRule> triple_rules;
    std::vector<int> sporadic; // the (2,4,6) triple
    std::vector<PaperTable> tables;
};

// Data-file duplicate of the table data (guards transcription drift in the
// code-level copy). Throws parse_error with line numbers.
PaperTables load_paper_tables(const std::string& path);
PaperTables load_paper_tables_stream(std::istream& in, const std::string& name);

// Compile-time default location of the shipped data file; the CLI can
// override it with --data or the RP_TABLES_FILE environment variable.
std::string default_paper_tables_path();

// For every row: arity and entrywise-sum consistency against the parent,
// |A| = lambda, lambda coverage 1..floor(n/2), and both parts RP by the
// signature solver. Triple rules are cross-checked against the code-level
// table.
RunReport verify_paper_tables(const PaperTables& tables, SemistarSolver& solver);

} // namespace rp
