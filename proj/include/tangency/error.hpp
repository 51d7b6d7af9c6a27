#ifndef TANGENCY_ERROR_HPP
#define TANGENCY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tangency {

/// Caller supplied input that violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Operands live in different rings (different ambient n or arity).
class IncompatibleRings : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
};

class NotTopCodimension : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
};

/// An internal identity that must hold failed.
class AssertionFailure : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace tangency

#endif
