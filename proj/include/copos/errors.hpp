#pragma once

#include <stdexcept>
#include <string>

namespace copos {

/// Invalid argument: shape mismatch, index out of range, bad configuration.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A simplex whose vertices are (numerically) affinely dependent, or which
/// cannot be bisected because its diameter is zero.
class DegenerateCellError : public std::runtime_error {
public:
    explicit DegenerateCellError(const std::string& what) : std::runtime_error(what) {}
};

/// The hypothesis of a check does not hold, so the check does not apply.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// Malformed input document.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace copos
