#pragma once

#include <stdexcept>

namespace qcorr {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A matrix handed to a Hermitian-only routine was not Hermitian.
struct NotHermitian : Error {
    using Error::Error;
};

// A density matrix (or candidate) violates Hermiticity, unit trace or
// positive semidefiniteness beyond the documented tolerances.
struct InvalidState : Error {
    using Error::Error;
};

// A channel or state parameter lies outside its admissible interval.
struct ParamOutOfRange : Error {
    using Error::Error;
};

// A decay rate or elapsed time was negative.
struct NegativeInput : Error {
    using Error::Error;
};

// A Kraus operator set fails the completeness relation.
struct InvalidChannel : Error {
    using Error::Error;
};

// A state was requested in X form but carries forbidden matrix entries.
struct NotXForm : Error {
    using Error::Error;
};

// A state cannot be expressed in the restricted Pauli-correlation form.
struct NotRepresentable : Error {
    using Error::Error;
};

// A correlation form with a local polarization term was passed to a
// Bell-diagonal-only routine.
struct NotBellDiagonal : Error {
    using Error::Error;
};

// The measurement optimizer exhausted its iteration budget.
struct OptimizerDidNotConverge : Error {
    using Error::Error;
};

}  // namespace qcorr
