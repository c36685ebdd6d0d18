#pragma once

#include <optional>
#include <vector>

#include "obstruct/core/cover.hpp"
#include "obstruct/homology/certificate.hpp"
#include "obstruct/homology/homology.hpp"

namespace obstruct {

enum class ObstructionStatus { Empty, ConeCertified, CollapseCertified, HomologyOnly };

const char* status_name(ObstructionStatus s);

/// A simplex of K \ P with its obstruction complex St(σ, A).
struct PComplementItem {
    Simplex simplex;
    /// Explicit complex; for a flag K every clique of St(σ, A) is listed.
    Complex obstruction;
    ObstructionStatus status = ObstructionStatus::Empty;
    ContractibilityCertificate certificate;
    /// Reduced integral homology of the obstruction in every degree it has.
    HomologyProfile profile;

    bool contractible() const { return certificate.certified(); }
    /// Nonempty with vanishing reduced H_0.
    bool connected() const;
    bool acyclic() const { return status != ObstructionStatus::Empty && profile.trivial(); }
};

/// Obstruction complexes are listed in full only up to this many vertices.
inline constexpr int kObstructionVertexLimit = 24;

/// St(σ, A) materialized: every simplex for explicit K, every clique for flag K.
Complex obstruction_complex(const Complex& k, const Simplex& sigma, const VertexSet& a);

PComplementItem classify(const Complex& k, const Simplex& sigma, const VertexSet& a);

/// K \ P up to dim_cap, each simplex paired with its classified obstruction,
/// ordered by dimension then lexicographically.
std::vector<PComplementItem> enumerate_p_complement(const Complex& k, const Cover& cover, int dim_cap);

}  // namespace obstruct
