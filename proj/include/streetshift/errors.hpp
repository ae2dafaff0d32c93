#pragma once

#include <stdexcept>
#include <string>

namespace streetshift {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor/graph shape violation. Message names the offending node.
struct ShapeError : Error {
    using Error::Error;
};

// Malformed input text (CSV, config files, manifests).
struct ParseError : Error {
    using Error::Error;
};

// Domain construction failures (decile overlap, empty datasets).
struct DomainError : Error {
    using Error::Error;
};

// Training aborted; `term` names the first non-finite loss component.
struct TrainingError : Error {
    std::string term;
    TrainingError(const std::string& msg, std::string term_name)
        : Error(msg), term(std::move(term_name)) {}
};

// Checkpoint serialization problems (corruption, version/shape mismatch).
struct CheckpointError : Error {
    using Error::Error;
};

// Filesystem and codec failures.
struct IoError : Error {
    using Error::Error;
};

}  // namespace streetshift
