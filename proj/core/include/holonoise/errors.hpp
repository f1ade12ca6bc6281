#pragma once

#include <stdexcept>
#include <string>

namespace holonoise {

/// Raised when an argument lies outside the domain of an operation
/// (non-positive length, undersampled configuration, empty band, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when the circulant embedding of a covariance fails to be
/// non-negative definite within tolerance.
class SynthesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested significance cannot be reached (no signal power in band).
class UnreachableTargetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file content (CSV/JSON that does not follow the format).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace holonoise
