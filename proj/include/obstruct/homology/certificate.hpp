#pragma once

#include <optional>
#include <vector>

#include "obstruct/core/complex.hpp"

namespace obstruct {

/// Remove `face` and `coface`, where `face` lies in no other simplex.
struct Collapse {
    Simplex face;
    Simplex coface;
    friend bool operator==(const Collapse&, const Collapse&) = default;
};

/// A sufficient witness of contractibility. Kind::None proves nothing.
struct ContractibilityCertificate {
    enum class Kind { CentralSimplex, CollapseSequence, None };
    Kind kind = Kind::None;
    std::optional<Simplex> central;
    std::vector<Collapse> collapses;

    bool certified() const { return kind != Kind::None; }
};

/**
 * Looks for a central simplex (the set of all central vertices, if any), then
 * tries greedy elementary collapses down to one vertex. Throws EmptyComplex.
 *
 * A flag complex is only collapsed when its listing up to the ceiling is the
 * whole complex.
 */
ContractibilityCertificate contractibility_certificate(const Complex& k);

/// Replays the collapses on K and checks that a single vertex remains.
bool collapses_to_point(const Complex& k, const std::vector<Collapse>& collapses);

/// Whether a certificate is valid for K.
bool verify_certificate(const Complex& k, const ContractibilityCertificate& cert);

}  // namespace obstruct
