#pragma once

#include <stdexcept>
#include <string>

namespace bagforge {

// Precondition / API-contract violations. CLI maps these to exit code 1.
struct ContractError : std::logic_error {
  explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

// Tensor dimension mismatches; message names both shapes.
struct ShapeError : ContractError {
  explicit ShapeError(const std::string& msg) : ContractError(msg) {}
};

// Numeric domain failures (zero norms, log of non-positive values, ...).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// On-disk format violations; message carries the byte offset. Exit code 2.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dataset content problems (e.g. missing gene vectors where required).
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Optimizer-level failures; message names the offending parameter.
struct TrainingError : std::runtime_error {
  explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

// A graph builder produced two different forward values for identical inputs.
struct ReproducibilityError : std::runtime_error {
  explicit ReproducibilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// A metric is undefined for the given inputs (e.g. single-class AUC).
struct MetricError : std::runtime_error {
  explicit MetricError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bagforge
