#pragma once

#include <stdexcept>
#include <string>

namespace laura {

// Base of all pipeline errors. Data errors derive from Error directly;
// anything caused by an external service derives from ServiceError so the
// CLI can map the two families to distinct exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ServiceError : public Error {
public:
    using Error::Error;
};

// --- record serialization ---

class MalformedRecord : public Error {
public:
    using Error::Error;
};

class SchemaViolation : public Error {
public:
    SchemaViolation(std::string field, const std::string& what)
        : Error("schema violation: " + field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

class InvariantViolation : public Error {
public:
    explicit InvariantViolation(std::string invariant)
        : Error("invariant violation: " + invariant), invariant_(std::move(invariant)) {}
    const std::string& invariant() const { return invariant_; }

private:
    std::string invariant_;
};

// --- diff / source parsing ---

class DiffSyntax : public Error {
public:
    DiffSyntax(std::size_t line, std::size_t column, const std::string& what)
        : Error("diff syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class ParserUnavailable : public Error {
public:
    using Error::Error;
};

// --- platform / provider access ---

class AuthError : public ServiceError {
public:
    using ServiceError::ServiceError;
};

class RateLimited : public ServiceError {
public:
    explicit RateLimited(double retry_after_seconds)
        : ServiceError("rate limited, retry after " + std::to_string(retry_after_seconds) + "s"),
          retry_after_(retry_after_seconds) {}
    double retry_after_seconds() const { return retry_after_; }

private:
    double retry_after_;
};

class TransientNetwork : public ServiceError {
public:
    using ServiceError::ServiceError;
};

class NotFound : public ServiceError {
public:
    using ServiceError::ServiceError;
};

class PayloadShape : public ServiceError {
public:
    explicit PayloadShape(std::string field)
        : ServiceError("payload missing required field: " + field), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

class BudgetExhausted : public ServiceError {
public:
    using ServiceError::ServiceError;
};

class ProviderUnavailable : public ServiceError {
public:
    using ServiceError::ServiceError;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SidecarCorrupt : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

// --- curation / generation / evaluation ---

class AmbiguousVerdict : public Error {
public:
    using Error::Error;
};

class TemplateMissing : public Error {
public:
    explicit TemplateMissing(std::string kind)
        : Error("prompt template missing for part kind: " + kind), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class SetCountOutOfRange : public Error {
public:
    using Error::Error;
};

class ParseFailure : public Error {
public:
    using Error::Error;
};

class EmptyCounts : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

} // namespace laura
