#include "triconf/errors.hpp"

namespace triconf {

const char* error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Domain: return "DomainError";
    case ErrorCode::DuplicateId: return "DuplicateIdError";
    case ErrorCode::EmptyTable: return "EmptyTableError";
    case ErrorCode::UnknownId: return "UnknownIdError";
    case ErrorCode::EmptyIssueSet: return "EmptyIssueSetError";
    case ErrorCode::EmptyAgentSet: return "EmptyAgentSetError";
    case ErrorCode::InvalidDegree: return "InvalidDegreeError";
    case ErrorCode::ResourceLimit: return "ResourceLimitError";
    case ErrorCode::DuplicateIssue: return "DuplicateIssueError";
    case ErrorCode::EmptyStrategy: return "EmptyStrategyError";
    case ErrorCode::NeutralLiteral: return "NeutralLiteralError";
    case ErrorCode::FixtureMissing: return "FixtureMissingError";
    case ErrorCode::InvalidThreshold: return "InvalidThresholdError";
    }
    return "Error";
}

}  // namespace triconf
