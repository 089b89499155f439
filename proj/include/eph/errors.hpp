#pragma once

#include <stdexcept>
#include <string>

namespace eph {

// bad arguments, mismatched signatures, malformed input
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// value outside the domain of an operation (argument of a zero divisor, pole, ...)
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// geometric or algebraic degeneracy (no centre, singular pencil, rank loss)
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace eph
