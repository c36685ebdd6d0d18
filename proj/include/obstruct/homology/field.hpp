#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "obstruct/metric/distance.hpp"

namespace obstruct {

/// The rationals, exactly.
struct RationalField {
    using T = Rational;
    T zero() const { return 0; }
    T from_int(long long v) const { return v; }
    bool is_zero(const T& v) const { return v == 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T div(const T& a, const T& b) const { return a / b; }
    std::string str(const T& v) const { return v.str(); }
};

/// Integers modulo a prime p < 2^32.
struct PrimeField {
    using T = std::uint64_t;
    std::uint64_t p;

    T zero() const { return 0; }
    T from_int(long long v) const {
        long long m = v % static_cast<long long>(p);
        return static_cast<T>(m < 0 ? m + static_cast<long long>(p) : m);
    }
    bool is_zero(T v) const { return v == 0; }
    T add(T a, T b) const { return (a + b) % p; }
    T sub(T a, T b) const { return (a + p - b) % p; }
    T mul(T a, T b) const { return (a * b) % p; }
    T inv(T a) const {
        // Fermat: a^(p-2)
        T result = 1, base = a % p;
        for (std::uint64_t e = p - 2; e; e >>= 1) {
            if (e & 1)
                result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    }
    T div(T a, T b) const { return mul(a, inv(b)); }
    std::string str(T v) const { return std::to_string(v); }
};

/// Sparse vector: (index, nonzero value) pairs with strictly increasing index.
template <typename F>
using SparseVec = std::vector<std::pair<std::size_t, typename F::T>>;

/// a + c * b
template <typename F>
SparseVec<F> axpy(const F& f, const SparseVec<F>& a, const typename F::T& c, const SparseVec<F>& b) {
    SparseVec<F> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            auto v = f.mul(c, b[j].second);
            if (!f.is_zero(v))
                out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            auto v = f.add(a[i].second, f.mul(c, b[j].second));
            if (!f.is_zero(v))
                out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

/**
 * Row echelon basis keyed by the largest index of each stored vector. Each
 * stored vector carries a tag, a sparse record of how it was formed from
 * caller supplied generators, and reductions update tags alongside vectors.
 */
template <typename F>
class EchelonBasis {
public:
    explicit EchelonBasis(F field) : f_(std::move(field)) {}

    struct Reduced {
        SparseVec<F> remainder;
        SparseVec<F> tag;
    };

    /// v minus a combination of stored vectors, with the tag adjusted by the same combination.
    Reduced reduce(SparseVec<F> v, SparseVec<F> tag = {}) const {
        while (!v.empty()) {
            auto it = pivots_.find(v.back().first);
            if (it == pivots_.end())
                break;
            const auto& row = rows_[it->second];
            auto c = f_.sub(f_.zero(), f_.div(v.back().second, row.back().second));
            v = axpy(f_, v, c, row);
            tag = axpy(f_, tag, c, tags_[it->second]);
        }
        return {std::move(v), std::move(tag)};
    }

    /// Stores the reduced vector when independent and returns true; otherwise
    /// returns false and leaves the dependency's tag in `dependency`.
    bool insert(SparseVec<F> v, SparseVec<F> tag = {}, SparseVec<F>* dependency = nullptr) {
        Reduced r = reduce(std::move(v), std::move(tag));
        if (r.remainder.empty()) {
            if (dependency)
                *dependency = std::move(r.tag);
            return false;
        }
        pivots_.emplace(r.remainder.back().first, rows_.size());
        rows_.push_back(std::move(r.remainder));
        tags_.push_back(std::move(r.tag));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    const F& field() const { return f_; }

private:
    F f_;
    std::vector<SparseVec<F>> rows_;
    std::vector<SparseVec<F>> tags_;
    std::map<std::size_t, std::size_t> pivots_;
};

}  // namespace obstruct
