#pragma once

#include <stdexcept>
#include <string>

namespace propb {

// Error categories; mirrored one-to-one by the propb_status codes of the
// C API (see include/propb.h).
enum class ErrorCode {
    InvalidArgument = 1,
    InvalidHypergraph = 2,
    TrimCollision = 3,
    Infeasible = 4,
    BudgetExceeded = 5,
    Io = 6,
    Parse = 7,
    Precondition = 8,
    StructuralViolation = 9,
    NoWitness = 10,
    Uncolorable = 11,
    LimitExceeded = 12,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace propb
