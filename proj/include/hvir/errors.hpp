#ifndef HVIR_ERRORS_HPP
#define HVIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hvir {

// Base class for all errors raised by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two values from different group / module contexts were combined.
struct ContextError : Error {
    using Error::Error;
};

// A stated precondition does not hold (bad argument, wrong order kind, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Lattice enumeration hit the configured height cap.
struct SearchExhaustedError : Error {
    using Error::Error;
};

// The greedy operator search of the discrete reduction ran out of candidates.
struct StripExhaustedError : SearchExhaustedError {
    using SearchExhaustedError::SearchExhaustedError;
};

// An intermediate vector violated an invariant the reduction argument
// guarantees (a zero where a nonzero is promised, an unexpected support).
struct ProofViolationError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace hvir

#endif
