#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace planaut {

enum class ErrorCode {
    InvalidArgument,
    Parse,
    ConstantTermPresent,
    NoLinearPart,
    SingularLinearPart,
    NotScattered,
    JacobianNotUnit,
    InconsistentCoefficients,
    DegreeTooSmall,
    StructureInconsistent,
    VerificationFailed,
    InvalidSpec,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Base of every error raised by the library. Subclasses carry payloads
/// (witnesses, residuals) where the failure has one.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace planaut
