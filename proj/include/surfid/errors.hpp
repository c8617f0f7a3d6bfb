#pragma once

#include <stdexcept>
#include <string>

namespace surfid {

// Argument outside the declared domain of a function.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Argument sits on a singular locus (e.g. xy = 1 for the lasso function).
class SingularInputError : public DomainError {
public:
    explicit SingularInputError(const std::string& what) : DomainError(what) {}
};

// Trace data does not describe a hyperbolic one-holed or once-punctured torus.
class StructureError : public DomainError {
public:
    explicit StructureError(const std::string& what) : DomainError(what) {}
};

// Enumeration exceeded its record cap or integer slope bookkeeping overflowed.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace surfid
