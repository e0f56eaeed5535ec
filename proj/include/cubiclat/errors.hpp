#pragma once

#include <stdexcept>
#include <string>

namespace cubiclat {

// Violated parameter range or operation precondition.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Division by zero in exact field arithmetic.
struct division_by_zero : std::domain_error {
    using std::domain_error::domain_error;
};

// A Gram matrix failed the positive-definiteness requirement of an operation.
struct definiteness_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input document.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariant; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace cubiclat
