#pragma once

#include <stdexcept>
#include <string>

namespace fairsplit {

// Exhaustive enumeration refused: the instance exceeds a hard size cap.
struct InstanceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A search ran out of its state budget before finishing.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The caller violated an operation's precondition.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Something that must never happen. Always a bug.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace fairsplit
