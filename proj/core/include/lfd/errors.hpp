#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfd {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A fraction was built with a zero denominator.
class ZeroDenominator : public Error {
public:
    using Error::Error;
};

/// A substitution produced a zero denominator (e.g. specializing a symbol
/// that the denominator depends on).
class ZeroAfterSubstitution : public Error {
public:
    using Error::Error;
};

/// exp() was requested for a scalar that is not an integer-coefficient
/// polynomial in the declared parameters.
class UnsupportedExponent : public Error {
public:
    using Error::Error;
};

/// An iteration bound was hit before a finite-dimensional invariant
/// subspace closed up.  Carries the degrees seen along the way so the
/// caller can inspect growth.
class NotStabilizedWithinCap : public Error {
public:
    NotStabilizedWithinCap(const std::string& msg, std::vector<int> trace)
        : Error(msg), degree_trace(std::move(trace)) {}

    std::vector<int> degree_trace;
};

/// An operation that requires a locally nilpotent derivation was given
/// something else.
class NotLocallyNilpotent : public Error {
public:
    using Error::Error;
};

/// The Newton iteration used for the semisimple/nilpotent splitting could
/// not invert its correction term (cannot happen over a characteristic-0
/// field unless inputs are inconsistent; kept as a guard).
class NonInvertibleNewtonStep : public Error {
public:
    using Error::Error;
};

/// A matrix exponential needed eigenvalues that do not lie in the scalar
/// field (irrational square roots and the like).
class EigenvaluesNotInField : public Error {
public:
    using Error::Error;
};

/// A derivation did not match one of the supported canonical shapes.
class UnsupportedShape : public Error {
public:
    using Error::Error;
};

/// The eigenvalue data of a map was outside what the decision procedure
/// can analyze.
class UnsupportedSpectrum : public Error {
public:
    using Error::Error;
};

/// A family constructor was given parameters that violate its constraints.
class ConstraintViolated : public Error {
public:
    using Error::Error;
};

/// A parameter that must be nonzero (or non-root-of-unity etc.) was zero.
class ZeroParameter : public Error {
public:
    using Error::Error;
};

/// A resonance assignment contradicts the structure it must respect.
class ResonanceMismatch : public Error {
public:
    using Error::Error;
};

/// An operation that needs a nonzero polynomial received zero.
class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

/// A linear map that must be invertible is singular.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// An affine substitution with singular linear part.
class SingularAffine : public Error {
public:
    using Error::Error;
};

/// A name was declared twice in one session.
class DuplicateName : public Error {
public:
    using Error::Error;
};

/// A name was used without being declared.
class UnknownSymbol : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed; carries 1-based position info.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t line, std::size_t col)
        : Error(msg + " at line " + std::to_string(line) + ", column " +
                std::to_string(col)),
          line(line), col(col) {}

    std::size_t line;
    std::size_t col;
};

/// The verification driver was asked for a suite it does not know.
class UnknownSuite : public Error {
public:
    using Error::Error;
};

} // namespace lfd
