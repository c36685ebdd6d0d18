#include "obstruct/analysis/p_complement.hpp"

#include <algorithm>

#include "obstruct/core/error.hpp"

namespace obstruct {

const char* status_name(ObstructionStatus s) {
    switch (s) {
    case ObstructionStatus::Empty:
        return "empty";
    case ObstructionStatus::ConeCertified:
        return "cone";
    case ObstructionStatus::CollapseCertified:
        return "collapsible";
    case ObstructionStatus::HomologyOnly:
        return "homology-only";
    }
    return "?";
}

bool PComplementItem::connected() const {
    return status != ObstructionStatus::Empty && profile.betti(0) == 0 && profile.torsion(0).empty();
}

Complex obstruction_complex(const Complex& k, const Simplex& sigma, const VertexSet& a) {
    Complex ob = obstruction(k, sigma, a);
    if (!ob.is_flag())
        return ob;
    const int n = static_cast<int>(ob.num_vertices());
    if (n > kObstructionVertexLimit)
        throw EnumerationRefused("obstruction complex has too many vertices to list in full");
    return ob.with_dim_cap(std::max(n - 1, 0)).materialize();
}

PComplementItem classify(const Complex& k, const Simplex& sigma, const VertexSet& a) {
    PComplementItem item{sigma, obstruction_complex(k, sigma, a), ObstructionStatus::Empty, {}, {}};
    const int top = std::max(item.obstruction.dim_cap(), 0);
    item.profile = homology(item.obstruction, Coefficients::integers(), top, true);
    if (item.obstruction.empty())
        return item;
    item.certificate = contractibility_certificate(item.obstruction);
    switch (item.certificate.kind) {
    case ContractibilityCertificate::Kind::CentralSimplex:
        item.status = ObstructionStatus::ConeCertified;
        break;
    case ContractibilityCertificate::Kind::CollapseSequence:
        item.status = ObstructionStatus::CollapseCertified;
        break;
    case ContractibilityCertificate::Kind::None:
        item.status = ObstructionStatus::HomologyOnly;
        break;
    }
    return item;
}

std::vector<PComplementItem> enumerate_p_complement(const Complex& k, const Cover& cover, int dim_cap) {
    std::vector<PComplementItem> out;
    for (const Simplex& s : p_complement(k, cover, dim_cap))
        out.push_back(classify(k, s, cover.a));
    return out;
}

}  // namespace obstruct
