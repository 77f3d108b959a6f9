#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spbw
{

enum class ErrorCode {
    DivisionByZero,
    ZeroDivisor,
    DomainViolation,
    DimensionMismatch,
    Validation,
    SyntaxError,
    UnknownName,
    SchemaError,
    IoError,
    ConstantInF,
    NoScalarRatio,
    CoefficientRingNotScalar,
    EmptyRepresentation,
    CapsExceeded,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), m_code(code) {}

    ErrorCode code() const noexcept
    {
        return m_code;
    }

private:
    ErrorCode m_code;
};

// Parse failure at a byte offset of the input text.
class SyntaxError : public Error
{
public:
    SyntaxError(std::size_t position, const std::string &what)
        : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)), m_position(position)
    {
    }

    std::size_t position() const noexcept
    {
        return m_position;
    }

private:
    std::size_t m_position;
};

enum class ValidationIssueKind {
    ZeroD,
    DiagonalNotOne,
    LowerPartNotSmaller,
    AssociativityFailure,
    StrictnessViolation,
    MalformedRelation,
};

std::string_view to_string(ValidationIssueKind kind);

struct ValidationIssue {
    ValidationIssueKind kind;
    std::string detail;
};

// Thrown by presentation validation; carries every issue found, not just the first.
class ValidationErrors : public Error
{
public:
    explicit ValidationErrors(std::vector<ValidationIssue> issues);

    const std::vector<ValidationIssue> &issues() const noexcept
    {
        return m_issues;
    }

    bool has(ValidationIssueKind kind) const noexcept;

private:
    std::vector<ValidationIssue> m_issues;
};

} // namespace spbw
