#pragma once

#include <stdexcept>
#include <string>

namespace rrqa {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- document model ---

class InvalidPage : public Error {
public:
    using Error::Error;
};

/// Open/close tag id mismatch or unterminated PAGE block.
class MalformedTag : public Error {
public:
    using Error::Error;
};

class UnknownPage : public Error {
public:
    using Error::Error;
};

// --- corpus ---

class InsufficientDistracters : public Error {
public:
    using Error::Error;
};

class MalformedGeneration : public Error {
public:
    using Error::Error;
};

// --- persistence ---

class IoError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    SchemaError(const std::string& what, int line) : Error(what), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

// --- llm backends ---

class BackendError : public Error {
public:
    BackendError(const std::string& what, bool retryable)
        : Error(what), retryable_(retryable) {}
    bool retryable() const { return retryable_; }

private:
    bool retryable_ = false;
};

class TimeoutError : public BackendError {
public:
    explicit TimeoutError(const std::string& what) : BackendError(what, true) {}
};

class RateLimitExhausted : public BackendError {
public:
    explicit RateLimitExhausted(const std::string& what) : BackendError(what, false) {}
};

class UnparseablePrompt : public Error {
public:
    using Error::Error;
};

// --- pipeline / eval ---

class MalformedResponse : public Error {
public:
    using Error::Error;
};

class MissingSample : public Error {
public:
    using Error::Error;
};

class MultiGoldSample : public Error {
public:
    using Error::Error;
};

class InconsistentCallCount : public Error {
public:
    using Error::Error;
};

class MissingTraces : public Error {
public:
    using Error::Error;
};

// --- configuration ---

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace rrqa
