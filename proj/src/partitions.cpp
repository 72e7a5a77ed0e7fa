#include "rp/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rp {

int IntegerPartition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string IntegerPartition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

namespace {

// Parts are chosen largest-first (descending), which yields the documented
// order; each emitted partition is reversed into nondecreasing form.
bool emit_rec(int remaining, int max_part, int parts_left, std::vector<int>& acc,
              const std::function<bool(const IntegerPartition&)>& visit) {
    if (remaining == 0) {
        IntegerPartition p;
        p.parts.assign(acc.rbegin(), acc.rend());
        return visit(p);
    }
    if (parts_left == 0) return true;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // Remaining mass must fit in the parts still available, each <= p.
        if (parts_left > 0 && static_cast<long long>(p) * parts_left < remaining) break;
        acc.push_back(p);
        const bool go_on = emit_rec(remaining - p, p, parts_left < 0 ? -1 : parts_left - 1, acc, visit);
        acc.pop_back();
        if (!go_on) return false;
    }
    return true;
}

} // namespace

void for_each_integer_partition(int n, int max_parts,
                                const std::function<bool(const IntegerPartition&)>& visit) {
    if (n < 1) throw std::invalid_argument("integer partitions need n >= 1");
    std::vector<int> acc;
    emit_rec(n, n, max_parts, acc, visit);
}

std::vector<IntegerPartition> enumerate_integer_partitions(int n, int max_parts) {
    std::vector<IntegerPartition> out;
    for_each_integer_partition(n, max_parts, [&](const IntegerPartition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

} // namespace rp
