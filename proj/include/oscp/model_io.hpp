#pragma once

#include <stdexcept>
#include <string>

#include "oscp/model.hpp"

namespace oscp {

/// Raised on malformed or invalid model files.
struct ModelIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Loads a model definition:
///   { "comp1": {"a": .., "lambda": .., "jumps": {...}},
///     "comp2": {...}, "b": .. }
/// with jumps one of
///   {"kind": "exponential", "mu": ..}
///   {"kind": "hyperexponential", "p": [..], "mu": [..]}
///   {"kind": "erlang", "n": .., "mu": ..}
OscillatingModel load_model(const std::string& path);
OscillatingModel parse_model(const std::string& json_text);

}  // namespace oscp
