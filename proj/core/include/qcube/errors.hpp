#pragma once

#include <stdexcept>
#include <string>

namespace qcube {

/// Illegal argument: index out of the legal region, bad family, q < 2, ...
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Non-square input to a square-only operation, shape mismatch.
class DimensionError : public DomainError {
public:
    explicit DimensionError(const std::string& what) : DomainError(what) {}
};

/// Element not present in a poset.
class LookupError : public DomainError {
public:
    explicit LookupError(const std::string& what) : DomainError(what) {}
};

/// Enumeration or expansion guardrail exceeded. The formulas are the
/// scalable path; brute force fails fast instead of exhausting memory.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcube
