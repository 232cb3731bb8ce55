#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wva {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument or a type invariant was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The spectrum carries no power, so its centroid is undefined.
class NoSignal : public Error {
 public:
  using Error::Error;
};

/// The amplification-factor denominator vanished (total extinction of the mean).
class SingularPostSelection : public Error {
 public:
  using Error::Error;
};

/// |gamma cos(delta)| >= 1: the amplification factor has no finite maximum.
class UnboundedAmplification : public Error {
 public:
  using Error::Error;
};

/// A least-squares fit was requested on data with a single abscissa.
class DegenerateFit : public Error {
 public:
  using Error::Error;
};

/// No post-selection angle satisfies the requested SNR floor.
class DetectionLimited : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. line() is 1-based; 0 means "not tied to a line".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Invalid scenario configuration. field() is a JSON-pointer-like path, e.g. "/fbg1/fwhm_nm".
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace wva
