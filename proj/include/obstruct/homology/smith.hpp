#pragma once

#include <cstdint>
#include <vector>

#include "obstruct/metric/distance.hpp"

namespace obstruct {

/// Dense integer matrix, row major.
using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithResult {
    /// Nonzero diagonal entries d1 | d2 | ..., all positive.
    std::vector<BigInt> invariants;
    std::size_t rank = 0;
};

/**
 * Smith normal form by unimodular row and column operations in exact
 * arithmetic. Unit entries are eliminated first, choosing the pivot whose
 * row and column are sparsest; the remaining block is reduced around the
 * smallest-magnitude entry, which keeps intermediate growth low.
 */
SmithResult smith_normal_form(IntMatrix m);

/// Prime power factors of n > 1, ascending: 12 -> {3, 4}.
std::vector<std::uint64_t> prime_power_factors(const BigInt& n);

}  // namespace obstruct
