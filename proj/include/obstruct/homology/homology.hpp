#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "obstruct/core/complex.hpp"
#include "obstruct/homology/chain_complex.hpp"

namespace obstruct {

struct Coefficients {
    enum class Kind { Integers, Rationals, Prime };
    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;  ///< the prime, for Kind::Prime

    static Coefficients integers() { return {Kind::Integers, 0}; }
    static Coefficients rationals() { return {Kind::Rationals, 0}; }
    /// Throws InvalidInput unless p is a prime below 2^31.
    static Coefficients prime(std::uint64_t p);
    /// "z", "q", "zp:<p>"; also "Z", "Q", "F<p>".
    static Coefficients parse(const std::string& text);

    bool is_field() const { return kind != Kind::Integers; }
    /// "Z", "Q", "F2", ...
    std::string name() const;

    friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

struct HomologyGroup {
    std::size_t betti = 0;
    /// Prime power orders of the cyclic torsion summands, ascending. Integers only.
    std::vector<std::uint64_t> torsion;

    bool trivial() const { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyProfile {
    Coefficients coeffs;
    bool reduced = true;
    int min_degree = 0;  ///< -1 for reduced profiles
    std::vector<HomologyGroup> groups;

    int max_degree() const { return min_degree + static_cast<int>(groups.size()) - 1; }
    const HomologyGroup& group(int degree) const;
    std::size_t betti(int degree) const { return group(degree).betti; }
    const std::vector<std::uint64_t>& torsion(int degree) const { return group(degree).torsion; }
    /// Betti numbers in degrees from..max_degree().
    std::vector<std::size_t> bettis(int from = 0) const;
    /// Number of torsion summands whose order is a power of p.
    std::size_t p_torsion_count(int degree, std::uint64_t p) const;
    bool trivial() const;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Homology of the given chains in degrees min_degree..max_deg. Needs chains
/// through degree max_deg + 1.
HomologyProfile chain_homology(const ChainData& chains, Coefficients coeffs, int max_deg, bool reduced);

/// H_*(K) in degrees up to max_deg. A flag complex is listed to max_deg + 1
/// regardless of its own ceiling.
HomologyProfile homology(const Complex& k, Coefficients coeffs, int max_deg, bool reduced = true);

/// Homology of C(K)/C(L). Throws NotASubcomplex if L ⊄ K.
HomologyProfile relative_homology(const Complex& k, const Complex& l, Coefficients coeffs, int max_deg);

struct InducedMap {
    int degree = 0;
    Coefficients coeffs;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t rank = 0;
    /// target_dim x source_dim, entries printed in the field.
    std::vector<std::vector<std::string>> matrix;
    bool injective = false;
    bool surjective = false;

    bool iso() const { return injective && surjective; }
    friend bool operator==(const InducedMap&, const InducedMap&) = default;
};

/// H_deg(L) -> H_deg(K) for the inclusion L ⊆ K, unreduced, over a field.
/// Throws NotASubcomplex if L ⊄ K and InvalidInput for integer coefficients.
InducedMap induced_map(const Complex& l, const Complex& k, int degree, Coefficients field);

/// Rank of the sum of the maps H_deg(L_i) -> H_deg(K) over a field, unreduced.
std::size_t image_rank(const std::vector<Complex>& sources, const Complex& k, int degree, Coefficients field);

/// Rank of an integer matrix over a field.
std::size_t field_rank(const BoundaryMatrix& m, Coefficients field);

}  // namespace obstruct
