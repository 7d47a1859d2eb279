#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qbip {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unsupported file header.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Sample depth other than 8 bits (maxval != 255).
class UnsupportedDepthError : public Error {
public:
    using Error::Error;
};

/// File-system failure or truncated payload.
class IoError : public Error {
public:
    using Error::Error;
};

/// Dimension mismatch or raster too small for an operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Argument outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Measurement operators that do not sum to the identity.
class CompletenessError : public Error {
public:
    using Error::Error;
};

/// A qubit that should be |0> or |1> but is in superposition.
class CbsViolationError : public Error {
public:
    CbsViolationError(const std::string& what, std::size_t row, std::size_t col)
        : Error(what), row_(row), col_(col) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

}  // namespace qbip
