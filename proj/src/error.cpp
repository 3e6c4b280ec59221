#include "knets/error.hpp"

namespace knets {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::SquareDiscriminant: return "SquareDiscriminant";
        case ErrorCode::ZeroDiscriminant: return "ZeroDiscriminant";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::CoincidentLines: return "CoincidentLines";
        case ErrorCode::CoincidentPoints: return "CoincidentPoints";
        case ErrorCode::SingularTransform: return "SingularTransform";
        case ErrorCode::OrderMismatch: return "OrderMismatch";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::NotANet: return "NotANet";
        case ErrorCode::BadBasePoints: return "BadBasePoints";
        case ErrorCode::DegenerateFiber: return "DegenerateFiber";
        case ErrorCode::NotOrthogonal: return "NotOrthogonal";
        case ErrorCode::SharedLine: return "SharedLine";
        case ErrorCode::DegenerateData: return "DegenerateData";
        case ErrorCode::TooManyOnALine: return "TooManyOnALine";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::NotInPencil: return "NotInPencil";
        case ErrorCode::RankViolation: return "RankViolation";
        case ErrorCode::DegenerateParameters: return "DegenerateParameters";
        case ErrorCode::AxisFailure: return "AxisFailure";
        case ErrorCode::SearchExhausted: return "SearchExhausted";
        case ErrorCode::NotComplete: return "NotComplete";
        case ErrorCode::NonRealConfiguration: return "NonRealConfiguration";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace knets
