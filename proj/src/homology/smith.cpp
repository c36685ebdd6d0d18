#include "obstruct/homology/smith.hpp"

#include <algorithm>
#include <limits>

#include "obstruct/core/error.hpp"

namespace obstruct {

namespace {

BigInt magnitude(const BigInt& v) {
    return v < 0 ? BigInt(-v) : v;
}

// Eliminates every ±1 entry together with its row and column. Returns the
// number of pivots removed and leaves the rest of the matrix in `m` with the
// eliminated rows and columns dropped.
std::size_t eliminate_units(IntMatrix& m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::vector<bool> row_live(rows, true), col_live(cols, true);
    std::size_t pivots = 0;

    for (;;) {
        std::vector<std::size_t> row_nnz(rows, 0), col_nnz(cols, 0);
        for (std::size_t i = 0; i < rows; ++i) {
            if (!row_live[i])
                continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_live[j] && m[i][j] != 0) {
                    ++row_nnz[i];
                    ++col_nnz[j];
                }
            }
        }
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        std::size_t pi = 0, pj = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (!row_live[i])
                continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!col_live[j] || magnitude(m[i][j]) != 1)
                    continue;
                std::size_t cost = (row_nnz[i] - 1) * (col_nnz[j] - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (best_cost == std::numeric_limits<std::size_t>::max())
            break;

        // Clear column pj with row operations. Row pi is then a pivot row
        // whose other entries can be cleared by column operations that touch
        // no other row, so row pi and column pj simply drop out.
        const BigInt pivot = m[pi][pj];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pi || !row_live[i] || m[i][pj] == 0)
                continue;
            BigInt factor = m[i][pj] * pivot;
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_live[j] && m[pi][j] != 0)
                    m[i][j] -= factor * m[pi][j];
            }
        }
        row_live[pi] = false;
        col_live[pj] = false;
        ++pivots;
    }

    IntMatrix rest;
    for (std::size_t i = 0; i < rows; ++i) {
        if (!row_live[i])
            continue;
        std::vector<BigInt> row;
        for (std::size_t j = 0; j < cols; ++j) {
            if (col_live[j])
                row.push_back(std::move(m[i][j]));
        }
        rest.push_back(std::move(row));
    }
    m = std::move(rest);
    return pivots;
}

// Index of the smallest nonzero entry in the trailing block starting at t.
bool smallest_entry(const IntMatrix& m, std::size_t t, std::size_t& bi, std::size_t& bj) {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < m.size(); ++i) {
        for (std::size_t j = t; j < m[i].size(); ++j) {
            if (m[i][j] == 0)
                continue;
            BigInt mag = magnitude(m[i][j]);
            if (!found || mag < best) {
                found = true;
                best = mag;
                bi = i;
                bj = j;
            }
        }
    }
    return found;
}

void dense_smith(IntMatrix& m, std::vector<BigInt>& out) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Reselecting the global minimum after every pass keeps the
            // Euclidean steps short; pivoting on a shrinking remainder in
            // place lets the other entries blow up.
            std::size_t bi = t, bj = t;
            if (!smallest_entry(m, t, bi, bj))
                return;
            std::swap(m[t], m[bi]);
            for (auto& row : m)
                std::swap(row[t], row[bj]);

            bool remainder = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0)
                    continue;
                BigInt q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    m[i][j] -= q * m[t][j];
                remainder = remainder || m[i][t] != 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0)
                    continue;
                BigInt q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    m[i][j] -= q * m[i][t];
                remainder = remainder || m[t][j] != 0;
            }
            if (remainder)
                continue;
            // Row and column t are clear. Fold in a row the pivot does not divide.
            bool repaired = false;
            for (std::size_t i = t + 1; i < rows && !repaired; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k)
                            m[t][k] += m[i][k];
                        repaired = true;
                        break;
                    }
                }
            }
            if (!repaired)
                break;
        }
        out.push_back(magnitude(m[t][t]));
    }
}

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
    if (!m.empty()) {
        for (const auto& row : m) {
            if (row.size() != m[0].size())
                throw InvalidInput("ragged matrix");
        }
    }
    SmithResult out;
    std::size_t units = eliminate_units(m);
    out.invariants.assign(units, BigInt(1));
    dense_smith(m, out.invariants);
    std::sort(out.invariants.begin(), out.invariants.end());
    out.rank = out.invariants.size();
    return out;
}

std::vector<std::uint64_t> prime_power_factors(const BigInt& n) {
    if (n <= 1)
        return {};
    if (n > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw InvalidInput("torsion coefficient too large to factor");
    auto v = n.convert_to<std::uint64_t>();
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p)
            continue;
        std::uint64_t q = 1;
        while (v % p == 0) {
            v /= p;
            q *= p;
        }
        out.push_back(q);
    }
    if (v > 1)
        out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace obstruct
