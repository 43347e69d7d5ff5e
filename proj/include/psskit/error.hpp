#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psskit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (matrix rows vs. right-hand side, vector dims, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A vector set was built from invalid input; `index()` names the offending vector.
class VecSetError : public Error {
public:
    VecSetError(const std::string& what, std::size_t index) : Error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class ZeroVectorError : public VecSetError {
public:
    using VecSetError::VecSetError;
};

class DuplicateVectorError : public VecSetError {
public:
    using VecSetError::VecSetError;
};

/// An operation was called on an input that violates its documented precondition
/// (not a PSS, not a positive basis, point outside the span, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An internally computed certificate failed its own re-check. Never expected.
class CertificateError : public Error {
public:
    using Error::Error;
};

}  // namespace psskit
