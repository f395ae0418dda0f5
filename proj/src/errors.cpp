#include "planaut/errors.hpp"

namespace planaut {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Parse: return "ParseError";
        case ErrorCode::ConstantTermPresent: return "ConstantTermPresent";
        case ErrorCode::NoLinearPart: return "NoLinearPart";
        case ErrorCode::SingularLinearPart: return "SingularLinearPart";
        case ErrorCode::NotScattered: return "NotScattered";
        case ErrorCode::JacobianNotUnit: return "JacobianNotUnit";
        case ErrorCode::InconsistentCoefficients: return "InconsistentCoefficients";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::StructureInconsistent: return "StructureInconsistent";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
    }
    return "Unknown";
}

}  // namespace planaut
