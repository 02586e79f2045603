#pragma once

#include <compare>
#include <string>

namespace vknot {

// Pair (m, n) of non-negative integers: m virtualizations, n crossing
// changes.  All comparisons are dictionary order, which member-wise
// lexicographic <=> gives for free.
struct PairBound {
    int m = 0;
    int n = 0;

    friend auto operator<=>(const PairBound&, const PairBound&) = default;
};

inline std::string to_string(const PairBound& p) {
    return "(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
}

} // namespace vknot
