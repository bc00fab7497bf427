#pragma once

#include <stdexcept>
#include <string>

namespace taut {

// Malformed or inconsistent user input (bad JSON schema, wrong genus,
// incomplete pairing data). The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Requested genus beyond the supported table cap.
class ResourceLimitError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

} // namespace taut
