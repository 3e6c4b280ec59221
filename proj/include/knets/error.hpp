#ifndef KNETS_ERROR_HPP
#define KNETS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace knets {

enum class ErrorCode {
    OutOfRange,
    SquareDiscriminant,
    ZeroDiscriminant,
    DivisionByZero,
    FieldMismatch,
    NotInvertible,
    InvalidArgument,
    CoincidentLines,
    CoincidentPoints,
    SingularTransform,
    OrderMismatch,
    OrderTooLarge,
    NotANet,
    BadBasePoints,
    DegenerateFiber,
    NotOrthogonal,
    SharedLine,
    DegenerateData,
    TooManyOnALine,
    DegreeMismatch,
    NotInPencil,
    RankViolation,
    DegenerateParameters,
    AxisFailure,
    SearchExhausted,
    NotComplete,
    NonRealConfiguration,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace knets

#endif
