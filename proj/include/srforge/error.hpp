#pragma once

#include <stdexcept>
#include <string>

namespace srforge {

enum class errc {
    NonPrimeP,
    ReducibleModulus,
    NonMonicModulus,
    ContextMismatch,
    DivisionByZero,
    ZeroElement,
    FieldTooLarge,
    IndexOutOfRange,
    NonSquare,
    SingularA,
    DimensionMismatch,
    RowMismatch,
    NotPrimitive,
    NotInSpan,
    NotBlockAligned,
    SizeTooLarge,
    NotSuperregular,
    SingularB,
    SingularFactor,
    BadGeneratorExponent,
    MalformedBase,
    BadCoefficientRange,
    ConstraintViolated,
    ParseError,
};

const char* errc_name(errc c);

/// Typed failure; `what()` is "Name: detail".
class error : public std::runtime_error {
public:
    error(errc c, const std::string& detail)
        : std::runtime_error(std::string(errc_name(c)) + ": " + detail), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& detail) { throw error(c, detail); }

} // namespace srforge
