#pragma once

#include <stdexcept>
#include <string>

namespace gpaley {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define GPALEY_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& what) : Error(what) {}          \
    };

GPALEY_DEFINE_ERROR(NotPrimeError)
GPALEY_DEFINE_ERROR(BoundExceededError)
GPALEY_DEFINE_ERROR(DivisionByZeroError)
GPALEY_DEFINE_ERROR(ZeroArgumentError)
GPALEY_DEFINE_ERROR(NotADivisorError)
GPALEY_DEFINE_ERROR(NotSymmetricConnectionSetError)
GPALEY_DEFINE_ERROR(ZeroInConnectionSetError)
GPALEY_DEFINE_ERROR(OutOfRangeError)
GPALEY_DEFINE_ERROR(InvalidParamsError)
GPALEY_DEFINE_ERROR(IsConnectedError)
GPALEY_DEFINE_ERROR(NotHammingError)
GPALEY_DEFINE_ERROR(SingularBasisError)
GPALEY_DEFINE_ERROR(SpanNotSubfieldError)
GPALEY_DEFINE_ERROR(DegreeMismatchError)
GPALEY_DEFINE_ERROR(NotTransitiveError)
GPALEY_DEFINE_ERROR(NotASchemeError)
GPALEY_DEFINE_ERROR(SymmetryViolationError)
GPALEY_DEFINE_ERROR(CheckFailedError)
GPALEY_DEFINE_ERROR(TimeoutError)
GPALEY_DEFINE_ERROR(FormatError)

#undef GPALEY_DEFINE_ERROR

} // namespace gpaley
