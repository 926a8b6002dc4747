#pragma once

#include <stdexcept>
#include <string>

namespace twmack {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid mathematical input: bad tables, containment violations, parse problems.
class validation_error : public error {
public:
  explicit validation_error(const std::string& what) : error(what) {}
};

/// A construction-time verification failed (a witness of the failure is in the message).
class check_error : public error {
public:
  explicit check_error(const std::string& what) : error(what) {}
};

/// The instance is outside what the library supports (non-field base ring, etc.).
class unsupported_error : public error {
public:
  explicit unsupported_error(const std::string& what) : error(what) {}
};

} // namespace twmack
