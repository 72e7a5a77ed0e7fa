#include "rp/report.hpp"

#include <ostream>

namespace rp {

void RunReport::ok(const std::string& id) {
    ++checks;
    check_lines.push_back("ok " + id);
}

void RunReport::fail(const std::string& id, const std::string& message, const std::string& repro) {
    ++checks;
    check_lines.push_back("FAIL " + id + " " + message);
    failures.push_back(Failure{id, message, repro});
}

void RunReport::merge(const RunReport& other) {
    checks += other.checks;
    check_lines.insert(check_lines.end(), other.check_lines.begin(), other.check_lines.end());
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    wall_seconds += other.wall_seconds;
}

void print_report(std::ostream& out, const RunReport& report, bool per_check_lines) {
    if (per_check_lines)
        for (const auto& line : report.check_lines) out << line << "\n";
    for (const auto& f : report.failures)
        if (!f.repro.empty()) out << "repro " << f.id << ": " << f.repro << "\n";
    out << "suite " << report.suite << " " << (report.passed() ? "PASS" : "FAIL") << " checks="
        << report.checks << " failures=" << report.failures.size() << " wall_s=" << report.wall_seconds
        << "\n";
}

} // namespace rp
