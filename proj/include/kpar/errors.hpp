#pragma once

#include <stdexcept>
#include <string>

namespace kpar {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAGroup : Error {
    explicit NotAGroup(const std::string& reason) : Error("not a group: " + reason) {}
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("operands belong to different fields") {}
};

struct GroupMismatch : Error {
    GroupMismatch() : Error("operands belong to different groups") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch() : Error("ambient dimensions differ") {}
};

struct IdentityMissing : Error {
    IdentityMissing() : Error("subset does not contain the identity") {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error("order cap exceeded: " + what) {}
};

struct NotInOmega : Error {
    NotInOmega() : Error("subset is not a point of the spectrum") {}
};

struct ZeroHasNoInverse : Error {
    ZeroHasNoInverse() : Error("zero has no inverse") {}
};

struct ZeroElement : Error {
    ZeroElement() : Error("operation requires a nonzero element") {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what) : Error("precondition failed: " + what) {}
};

struct InvalidGenerator : Error {
    explicit InvalidGenerator(const std::string& what) : Error("invalid generator: " + what) {}
};

struct NotIdempotent : Error {
    NotIdempotent() : Error("factor set is not idempotent") {}
};

struct MissingZero : Error {
    MissingZero() : Error("index set must contain 0") {}
};

struct NotAFixedPoint : Error {
    NotAFixedPoint() : Error("the given data does not describe a fixed point") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error("schema error: " + what) {}
};

} // namespace kpar
