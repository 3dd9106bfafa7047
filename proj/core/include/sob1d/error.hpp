#pragma once

#include <stdexcept>
#include <string>

namespace sob1d {

/// Raised when an operation's precondition on its arguments is violated.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace sob1d
