#pragma once

#include "qcorr/cmat.hpp"

namespace qcorr {

// A validated two-qubit state: Hermitian within 1e-12 entrywise, unit trace
// within 1e-12, eigenvalues >= -1e-10. Construction throws InvalidState on
// violation; instances are immutable afterwards.
class DensityMatrix {
  public:
    static constexpr double kHermiticityTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kEigenvalueFloor = -1e-10;

    explicit DensityMatrix(const CMat4& m);

    const CMat4& mat() const { return m_; }
    Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  private:
    CMat4 m_;
};

}  // namespace qcorr
