#pragma once

#include <stdexcept>
#include <string>

namespace triconf {

enum class ErrorCode {
    Parse = 1,
    Domain,
    DuplicateId,
    EmptyTable,
    UnknownId,
    EmptyIssueSet,
    EmptyAgentSet,
    InvalidDegree,
    ResourceLimit,
    DuplicateIssue,
    EmptyStrategy,
    NeutralLiteral,
    FixtureMissing,
    InvalidThreshold,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

#define TRICONF_ERROR(Name)                                                      \
    class Name##Error : public Error {                                           \
    public:                                                                      \
        explicit Name##Error(const std::string& what) : Error(ErrorCode::Name, what) {} \
    }

TRICONF_ERROR(Parse);
TRICONF_ERROR(Domain);
TRICONF_ERROR(DuplicateId);
TRICONF_ERROR(EmptyTable);
TRICONF_ERROR(UnknownId);
TRICONF_ERROR(EmptyIssueSet);
TRICONF_ERROR(EmptyAgentSet);
TRICONF_ERROR(InvalidDegree);
TRICONF_ERROR(ResourceLimit);
TRICONF_ERROR(DuplicateIssue);
TRICONF_ERROR(EmptyStrategy);
TRICONF_ERROR(NeutralLiteral);
TRICONF_ERROR(FixtureMissing);
TRICONF_ERROR(InvalidThreshold);

#undef TRICONF_ERROR

}  // namespace triconf
