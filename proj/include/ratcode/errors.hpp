#pragma once

#include <stdexcept>
#include <string>

namespace ratcode {

/// Base class for all library errors.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define RATCODE_DEFINE_ERROR(NAME)                                       \
    class NAME : public Error {                                          \
       public:                                                           \
        explicit NAME(const std::string& what = #NAME) : Error(what) {}  \
    }

// gf
RATCODE_DEFINE_ERROR(NotPrime);
RATCODE_DEFINE_ERROR(ReducibleModulus);
RATCODE_DEFINE_ERROR(DivisionByZero);
RATCODE_DEFINE_ERROR(MixedFields);
RATCODE_DEFINE_ERROR(IndexOutOfRange);

// rfcode
RATCODE_DEFINE_ERROR(NotAFunction);
RATCODE_DEFINE_ERROR(MessageOutOfRange);
RATCODE_DEFINE_ERROR(DegreeTooLarge);
RATCODE_DEFINE_ERROR(NoSolution);
RATCODE_DEFINE_ERROR(VerificationFailed);
RATCODE_DEFINE_ERROR(LengthMismatch);
RATCODE_DEFINE_ERROR(TooLarge);

// zeta
RATCODE_DEFINE_ERROR(InvalidL);
RATCODE_DEFINE_ERROR(NegativePointCount);
RATCODE_DEFINE_ERROR(NonIntegerResult);
RATCODE_DEFINE_ERROR(OutOfRange);
RATCODE_DEFINE_ERROR(NotASquare);
RATCODE_DEFINE_ERROR(BracketFailure);

// malformed caller input that is not one of the domain errors above
RATCODE_DEFINE_ERROR(InvalidArgument);

#undef RATCODE_DEFINE_ERROR

}  // namespace ratcode
