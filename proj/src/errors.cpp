#include <spbw/errors.hpp>

#include <algorithm>

namespace spbw
{

std::string_view to_string(ErrorCode code)
{
    switch (code) {
        case ErrorCode::DivisionByZero:
            return "DivisionByZero";
        case ErrorCode::ZeroDivisor:
            return "ZeroDivisor";
        case ErrorCode::DomainViolation:
            return "DomainViolation";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::Validation:
            return "ValidationErrors";
        case ErrorCode::SyntaxError:
            return "SyntaxError";
        case ErrorCode::UnknownName:
            return "UnknownName";
        case ErrorCode::SchemaError:
            return "SchemaError";
        case ErrorCode::IoError:
            return "IoError";
        case ErrorCode::ConstantInF:
            return "ConstantInF";
        case ErrorCode::NoScalarRatio:
            return "NoScalarRatio";
        case ErrorCode::CoefficientRingNotScalar:
            return "CoefficientRingNotScalar";
        case ErrorCode::EmptyRepresentation:
            return "EmptyRepresentation";
        case ErrorCode::CapsExceeded:
            return "CapsExceeded";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

std::string_view to_string(ValidationIssueKind kind)
{
    switch (kind) {
        case ValidationIssueKind::ZeroD:
            return "ZeroD";
        case ValidationIssueKind::DiagonalNotOne:
            return "DiagonalNotOne";
        case ValidationIssueKind::LowerPartNotSmaller:
            return "LowerPartNotSmaller";
        case ValidationIssueKind::AssociativityFailure:
            return "AssociativityFailure";
        case ValidationIssueKind::StrictnessViolation:
            return "StrictnessViolation";
        case ValidationIssueKind::MalformedRelation:
            return "MalformedRelation";
    }
    return "Unknown";
}

namespace
{

std::string summarize(const std::vector<ValidationIssue> &issues)
{
    std::string out = "presentation failed validation:";
    for (const auto &issue : issues) {
        out += "\n  ";
        out += to_string(issue.kind);
        out += ": ";
        out += issue.detail;
    }
    return out;
}

} // namespace

ValidationErrors::ValidationErrors(std::vector<ValidationIssue> issues)
    : Error(ErrorCode::Validation, summarize(issues)), m_issues(std::move(issues))
{
}

bool ValidationErrors::has(ValidationIssueKind kind) const noexcept
{
    return std::any_of(m_issues.begin(), m_issues.end(), [kind](const auto &i) { return i.kind == kind; });
}

} // namespace spbw
