#pragma once

#include <stdexcept>
#include <string>

namespace rp {

// Thrown when an operation would exceed its documented exact-search budget.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (graph expressions, signatures, data files).
// line and column are 1-based; 0 means "not applicable".
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(what), line(line), column(column) {}
    int line;
    int column;
};

class construction_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rp
