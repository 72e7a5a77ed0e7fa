#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace rp {

// Nondecreasing positive parts summing to total().
struct IntegerPartition {
    std::vector<int> parts;

    int total() const;
    int largest() const { return parts.empty() ? 0 : parts.back(); }
    std::string str() const; // "(1,2,3)"

    auto operator<=>(const IntegerPartition&) const = default;
};

// Visits every partition of n exactly once, ordered by descending largest
// part (then recursively by the next part): n=5 gives (5),(1,4),(2,3),
// (1,1,3),(1,2,2),(1,1,1,2),(1,1,1,1,1). Stops early when visit returns
// false. max_parts < 0 means unbounded.
void for_each_integer_partition(int n, int max_parts,
                                const std::function<bool(const IntegerPartition&)>& visit);

std::vector<IntegerPartition> enumerate_integer_partitions(int n, int max_parts = -1);

} // namespace rp
