#pragma once

#include <stdexcept>
#include <string>

namespace qannulus {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A tail polynomial would exceed the representable degree.
struct DegreeOverflowError : Error {
    using Error::Error;
};

/// Input outside the domain an operation supports (e.g. non-finitely-supported
/// input to the parametrix).
struct UnsupportedInputError : Error {
    using Error::Error;
};

/// Weight parameters for which a requested series is not guaranteed to
/// converge. The message names the violated inequality.
struct DivergenceError : Error {
    using Error::Error;
};

/// Index arguments out of range.
struct DomainError : Error {
    using Error::Error;
};

/// Requested dense problem too large.
struct SizeError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    ConfigError(std::string field, int line, const std::string& what)
        : Error(format(field, line, what)), field(std::move(field)), line(line) {}

    std::string field;
    int line;

private:
    static std::string format(const std::string& field, int line, const std::string& what) {
        std::string msg = "config";
        if (line > 0) msg += ":" + std::to_string(line);
        if (!field.empty()) msg += ": field '" + field + "'";
        return msg + ": " + what;
    }
};

}  // namespace qannulus
