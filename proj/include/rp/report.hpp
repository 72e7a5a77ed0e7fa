#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rp {

// Machine-readable suite outcome. Check lines and failures are content-stable
// across runs; wall time is the only varying field.
struct RunReport {
    struct Failure {
        std::string id;
        std::string message;
        std::string repro; // command reproducing the failing check
    };

    std::string suite;
    int checks = 0;
    std::vector<std::string> check_lines; // one record per check, "ok <id>" / "FAIL <id> <msg>"
    std::vector<Failure> failures;
    double wall_seconds = 0.0;

    bool passed() const { return failures.empty(); }

    void ok(const std::string& id);
    void fail(const std::string& id, const std::string& message, const std::string& repro = "");
    void merge(const RunReport& other);
};

// Per-check lines followed by a one-line summary (the only place wall time
// appears).
void print_report(std::ostream& out, const RunReport& report, bool per_check_lines = true);

} // namespace rp
