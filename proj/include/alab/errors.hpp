#pragma once

#include <stdexcept>
#include <string>

namespace alab {

enum class ErrorKind {
    InvalidElement,
    BasisMismatch,
    NotAntipodal,
    NotProximal,
    AngleUnderflow,
    BudgetExceeded,
    InvalidTheta,
    DegenerateForm,
    OptimFailed,
    InsufficientScales,
    ScaleRangeTooNarrow,
    ConfigError,
};

const char* error_kind_name(ErrorKind k);

// Single exception type; the kind is what callers dispatch on.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace alab
