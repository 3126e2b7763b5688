#pragma once

#include <stdexcept>
#include <string>

namespace plshark {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text; line is 1-based.
struct ParseError : Error {
    ParseError(int line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    int line;
};

// Argument outside the operation's contract (x outside the domain, lo >= hi, n = 0, ...).
struct DomainError : Error {
    using Error::Error;
};

struct HorizonExceeded : Error {
    using Error::Error;
};

// Some lap of f^n is the identity, so f^n(x) = x holds on a whole segment and
// the solution set is not finite.
struct NonIsolatedPeriodicPoints : Error {
    using Error::Error;
};

struct NotPeriodic : Error {
    using Error::Error;
};

struct NoSuchOrbit : Error {
    using Error::Error;
};

struct InvalidOrbit : Error {
    using Error::Error;
};

// A construction's stated precondition does not hold for the given input.
struct HypothesisNotSatisfied : Error {
    using Error::Error;
};

// A certified invariant failed after construction.  For the constructions that
// the theory guarantees, this indicates an implementation bug, and the message
// names the failed check.
struct ConstructionFailed : Error {
    using Error::Error;
};

} // namespace plshark
