#ifndef REORG_ERRORS_HPP
#define REORG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reorg {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct UnknownConcept : Error {
    using Error::Error;
};

struct UnknownFunctionality : UnknownConcept {
    using UnknownConcept::UnknownConcept;
};

struct UnresolvableProperty : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct UnknownAtom : Error {
    using Error::Error;
};

struct PoolMismatch : Error {
    using Error::Error;
};

struct MissingAssignment : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct NoCandidate : Error {
    using Error::Error;
};

struct NoSolution : Error {
    using Error::Error;
};

} // namespace reorg

#endif
