#pragma once

#include <stdexcept>
#include <string>

namespace cchol {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape or index violations (non-square input, mismatched block dims, ...).
struct DimensionError : Error {
    using Error::Error;
};

/// Input fails the Hermiticity gate ||m - m*|| <= herm_tol * ||m||.
struct NotHermitianError : Error {
    using Error::Error;
};

/// Input has an eigenvalue below the PSD gate -psd_tol * ||m||.
struct NotPsdError : Error {
    using Error::Error;
};

/// Eigensolver failed to converge.
struct NumericalError : Error {
    using Error::Error;
};

/// A Schur-complement block went negative beyond schur_tol * ||C||;
/// the block matrix handed to the factorization was not PSD.
struct NotPsdBlockError : Error {
    using Error::Error;
};

/// Channel failed the complete-positivity gate.
struct NotCpError : Error {
    using Error::Error;
};

/// Channel is not trace-preserving where TP is required.
struct NotTpError : Error {
    using Error::Error;
};

/// Operator failed the isometry gate ||V*V - I|| <= tol.
struct NotIsometryError : Error {
    using Error::Error;
};

/// Halmos extension failed the unitarity residual gate.
struct UnitarityError : Error {
    using Error::Error;
};

/// Input blocks are not unit lower triangular.
struct NotUniTriangularError : Error {
    using Error::Error;
};

/// Kraus list is empty.
struct EmptyKrausError : Error {
    using Error::Error;
};

/// Requested dimensions admit no isometry (N > d * env).
struct InvalidDimensionsError : Error {
    using Error::Error;
};

/// Malformed channel/factor file.
struct ParseError : Error {
    using Error::Error;
};

/// Filesystem failure (unreadable path, write failure).
struct IoError : Error {
    using Error::Error;
};

} // namespace cchol
