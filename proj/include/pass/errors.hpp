#pragma once

#include <stdexcept>
#include <string>

namespace pass {

// Raised when an input lies outside the domain of an operation
// (non-positive lengths, empty scenarios, t outside [0, T], ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A user coincides with a pinching antenna, so the free-space amplitude diverges.
class SingularityError : public std::domain_error {
public:
    explicit SingularityError(const std::string& what) : std::domain_error(what) {}
};

// Problem size outside what an exhaustive routine supports.
class UnsupportedSizeError : public std::length_error {
public:
    explicit UnsupportedSizeError(const std::string& what) : std::length_error(what) {}
};

} // namespace pass
