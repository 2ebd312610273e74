#include "qcorr/density_matrix.hpp"

#include <cmath>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {

DensityMatrix::DensityMatrix(const CMat4& m) : m_(m) {
    const double herm = hermiticity_defect(m_);
    if (herm > kHermiticityTol)
        throw InvalidState("density matrix not Hermitian (defect " + std::to_string(herm) + ")");
    const Complex tr = trace(m_);
    if (std::abs(tr - Complex(1.0)) > kTraceTol)
        throw InvalidState("density matrix trace differs from 1");
    const EigenSystem4 es = hermitian_eigensystem(m_);
    if (es.values.back() < kEigenvalueFloor)
        throw InvalidState("density matrix has eigenvalue " + std::to_string(es.values.back()));
}

}  // namespace qcorr
