#pragma once

#include <stdexcept>
#include <string>

namespace liewb {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violation: bad arguments, wrong basis/region, malformed input.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// An exact computation that must land in integers did not; the input cannot be
// what the caller claimed (e.g. not a genuine character).
class IntegralityError : public Error {
public:
    explicit IntegralityError(const std::string& what) : Error(what) {}
};

// The request would exceed a configured size cap (tensor-space dimension or
// total degree). Raise the cap explicitly instead of waiting forever.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// A matrix that was supposed to define a C_p representation does not.
class InvalidRep : public Error {
public:
    explicit InvalidRep(const std::string& what) : Error(what) {}
};

// A virtual Green-ring element was used where an actual module is required.
class NegativeCoords : public Error {
public:
    explicit NegativeCoords(const std::string& what) : Error(what) {}
};

// "This cannot happen" happened; a library invariant is broken.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

} // namespace liewb
