#pragma once

#include <stdexcept>
#include <string>

namespace qsmear {

// Base class for recoverable library errors. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Invalid physical or numerical configuration: bad constants, incompatible
// grids, outcomes in zero-density regions, unsupported parameter regimes.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what_arg) : Error(what_arg) {}
};

// A lattice cannot resolve or contain a requested feature, e.g. a kernel
// narrower than a few grid spacings or a domain shorter than the required
// support window.
class ResolutionError : public Error {
public:
    explicit ResolutionError(const std::string& what_arg) : Error(what_arg) {}
};

}  // namespace qsmear
