#pragma once

#include <stdexcept>
#include <string>

namespace passoc {

// Base for every domain error raised by the library. The CLI maps these to
// exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PASSOC_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                \
    public:                                                                    \
        using Error::Error;                                                    \
    }

PASSOC_DEFINE_ERROR(InvalidInputError);
PASSOC_DEFINE_ERROR(ParseError);
PASSOC_DEFINE_ERROR(CycleError);
PASSOC_DEFINE_ERROR(DuplicateElementError);
PASSOC_DEFINE_ERROR(UnknownElementError);
PASSOC_DEFINE_ERROR(NotATubeError);
PASSOC_DEFINE_ERROR(NotDisjointError);
PASSOC_DEFINE_ERROR(NotConnectedError);
PASSOC_DEFINE_ERROR(NotMaximalError);
PASSOC_DEFINE_ERROR(SingularSystemError);
PASSOC_DEFINE_ERROR(BoundednessError);
PASSOC_DEFINE_ERROR(EpsilonRangeError);
PASSOC_DEFINE_ERROR(NotGenericError);
PASSOC_DEFINE_ERROR(NotStronglyConnectedError);
PASSOC_DEFINE_ERROR(UnboundedError);

#undef PASSOC_DEFINE_ERROR

// A structural guarantee of the construction failed to hold. This is a bug
// (or a counterexample), never a user error.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace passoc
