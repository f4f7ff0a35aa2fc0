#pragma once

#include <stdexcept>
#include <string>

namespace cohortforge {

/// Input or invariant violation: bad files, bad schemas, bad arguments.
/// `code` is a stable machine-readable name (e.g. "BadDate", "OrphanRow")
/// that tests and the CLI match on; `what()` carries the human message.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Filesystem-level failure (missing file, unwritable path).
class IoError : public std::runtime_error {
public:
    IoError(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace cohortforge
