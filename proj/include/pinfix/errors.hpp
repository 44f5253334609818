#pragma once

#include <stdexcept>
#include <string>

namespace pinfix {

// Base for all library errors. CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// Misuse of a stateful API (backward twice, step without gradients, ...).
class StateError : public Error {
 public:
  using Error::Error;
};

// Violated call contract between pipeline stages.
class ContractError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class LengthError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A required artifact (checkpoint, data file) is missing.
class PrereqError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pinfix
