#pragma once

#include <stdexcept>
#include <string>

namespace flowmpc {

/// Raised when a computation produces or receives non-finite values.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an object is used outside its valid lifecycle
/// (e.g. backward on an empty tape).
class StateError : public std::logic_error {
public:
    explicit StateError(const std::string& what) : std::logic_error(what) {}
};

/// Raised for degenerate or exploding data during generation/normalization.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Integration produced a non-finite state; carries the failing step.
class IntegrationError : public NumericError {
public:
    IntegrationError(const std::string& what, long scenario, long step)
        : NumericError(what), scenario(scenario), step(step) {}
    long scenario;
    long step;
};

/// Flow rollout produced a non-finite state; carries (scenario, step).
class RolloutError : public NumericError {
public:
    RolloutError(const std::string& what, long scenario, long step)
        : NumericError(what), scenario(scenario), step(step) {}
    long scenario;
    long step;
};

/// Training loss became non-finite; carries (epoch, batch).
class TrainingError : public NumericError {
public:
    TrainingError(const std::string& what, long epoch, long batch)
        : NumericError(what), epoch(epoch), batch(batch) {}
    long epoch;
    long batch;
};

}  // namespace flowmpc
