// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVECAUCHY_ERRORS_HPP
#define WAVECAUCHY_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wavecauchy
{

// Exception hierarchy. Every error carries a category that maps onto the CLI
// exit codes (1 validation, 2 numerical, 3 I/O).
enum class ErrorCategory
{
  Validation,
  Numerical,
  Io
};

class Error : public std::runtime_error
{
public:
  Error(ErrorCategory category, const std::string &what)
    : std::runtime_error(what), category_(category)
  {
  }
  ErrorCategory Category() const noexcept { return category_; }

private:
  ErrorCategory category_;
};

// Invalid parameters handed to a constructor or factory.
class ConfigurationError : public Error
{
public:
  explicit ConfigurationError(const std::string &what)
    : Error(ErrorCategory::Validation, "configuration error: " + what)
  {
  }
};

// Aggregated validation failures; all messages are reported together.
class ValidationError : public Error
{
public:
  explicit ValidationError(std::vector<std::string> messages)
    : Error(ErrorCategory::Validation, Join(messages)), messages_(std::move(messages))
  {
  }
  const std::vector<std::string> &Messages() const noexcept { return messages_; }

private:
  static std::string Join(const std::vector<std::string> &messages)
  {
    std::string out = "validation failed (" + std::to_string(messages.size()) + " problem" +
                      (messages.size() == 1 ? "" : "s") + ")";
    for (const std::string &m : messages)
    {
      out += "\n  - " + m;
    }
    return out;
  }

  std::vector<std::string> messages_;
};

class GeometryError : public Error
{
public:
  explicit GeometryError(const std::string &what)
    : Error(ErrorCategory::Validation, "geometry error: " + what)
  {
  }
};

class DataError : public Error
{
public:
  explicit DataError(const std::string &what)
    : Error(ErrorCategory::Validation, "data error: " + what)
  {
  }
};

// Argument outside the domain of a function (e.g. y < |t| for the wave kernel).
class DomainError : public Error
{
public:
  explicit DomainError(const std::string &what)
    : Error(ErrorCategory::Numerical, "domain error: " + what)
  {
  }
};

// Floating-point range exhausted (exponent overflow in the kernel).
class RangeError : public Error
{
public:
  explicit RangeError(const std::string &what, double magnitude = 0.0)
    : Error(ErrorCategory::Numerical, "range error: " + what), magnitude_(magnitude)
  {
  }
  double Magnitude() const noexcept { return magnitude_; }

private:
  double magnitude_;
};

class NumericalError : public Error
{
public:
  explicit NumericalError(const std::string &what)
    : Error(ErrorCategory::Numerical, "numerical error: " + what)
  {
  }
};

class IoError : public Error
{
public:
  explicit IoError(const std::string &what) : Error(ErrorCategory::Io, "I/O error: " + what)
  {
  }
};

inline int ExitCode(ErrorCategory c)
{
  switch (c)
  {
    case ErrorCategory::Validation:
      return 1;
    case ErrorCategory::Numerical:
      return 2;
    case ErrorCategory::Io:
      return 3;
  }
  return 2;
}

}  // namespace wavecauchy

#endif  // WAVECAUCHY_ERRORS_HPP
