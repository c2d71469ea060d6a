#pragma once

#include <stdexcept>
#include <string>

namespace thetadirac {

/// A violated mathematical precondition: non-integral mu, rank mismatch,
/// a descriptor outside its family, a source outside the Dirac series.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed textual input (weights, group names, parameter strings).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace thetadirac
