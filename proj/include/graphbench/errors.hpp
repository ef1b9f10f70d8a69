#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphbench {

/// Base of all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad user-supplied configuration or an operation precondition violation.
struct ConfigError : Error {
    using Error::Error;
};

/// Malformed input file; message carries path and 1-based line number.
struct ParseError : ConfigError {
    ParseError(const std::string& path, std::size_t line, const std::string& what)
        : ConfigError(path + ":" + std::to_string(line) + ": " + what) {}
};

/// Input files are individually well-formed but inconsistent with each other.
struct IntegrityError : ConfigError {
    using ConfigError::ConfigError;
};

/// Operation called outside its domain (mismatched sizes, empty inputs, ...).
struct DomainError : ConfigError {
    using ConfigError::ConfigError;
};

/// A node partition could not be constructed (class starvation, degenerate sizes).
struct SplitError : ConfigError {
    using ConfigError::ConfigError;
};

/// A synthetic generator produced an invalid graph (e.g. an empty class).
struct GenerationError : ConfigError {
    using ConfigError::ConfigError;
};

/// A random walk ran out of its step budget before collecting enough edges,
/// i.e. the seed's component is too small for the requested subgraph.
struct ExhaustionError : Error {
    using Error::Error;
};

/// The reject sampler could not satisfy the KL thresholds within the attempt
/// budget. Carries the best divergences seen so callers can report how far
/// off the thresholds were.
struct SamplingInfeasible : Error {
    double best_node_kl;
    double best_edge_kl;
    int attempts;

    SamplingInfeasible(const std::string& what, double node_kl, double edge_kl, int n_attempts)
        : Error(what), best_node_kl(node_kl), best_edge_kl(edge_kl), attempts(n_attempts) {}
};

/// A classifier failed to fit or predict.
struct ModelError : Error {
    using Error::Error;
};

/// Something read a label it was not permitted to see.
struct GuardViolation : Error {
    using Error::Error;
};

} // namespace graphbench
