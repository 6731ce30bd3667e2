#pragma once

#include <stdexcept>
#include <string>

namespace gleib {

/// Base of every error raised by the library. Callers that only care about
/// "something went wrong" catch this; the CLI maps it to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define GLEIB_DEFINE_ERROR(Name)                   \
    class Name : public Error {                    \
    public:                                        \
        using Error::Error;                        \
    }

GLEIB_DEFINE_ERROR(InvalidField);
GLEIB_DEFINE_ERROR(FieldMismatch);
GLEIB_DEFINE_ERROR(DivisionByZero);
GLEIB_DEFINE_ERROR(DimensionMismatch);
GLEIB_DEFINE_ERROR(DimensionTooSmall);
GLEIB_DEFINE_ERROR(QnOddDimension);
GLEIB_DEFINE_ERROR(InvalidAlgebra);
GLEIB_DEFINE_ERROR(NotNilpotent);
GLEIB_DEFINE_ERROR(InvalidGroup);
GLEIB_DEFINE_ERROR(GroupMismatch);
GLEIB_DEFINE_ERROR(InconsistentHomomorphism);
GLEIB_DEFINE_ERROR(DifferentAlgebras);
GLEIB_DEFINE_ERROR(InvalidGrading);
GLEIB_DEFINE_ERROR(ZeroParameter);
GLEIB_DEFINE_ERROR(BudgetExceeded);
GLEIB_DEFINE_ERROR(UnsupportedFamily);
GLEIB_DEFINE_ERROR(BadDimension);
GLEIB_DEFINE_ERROR(ParseError);

#undef GLEIB_DEFINE_ERROR

}  // namespace gleib
