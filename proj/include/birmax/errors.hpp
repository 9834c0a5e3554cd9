#pragma once

#include <stdexcept>

namespace birmax {

/// Raised when an operation's precondition is violated.
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace birmax
