#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgroup/types.hpp"

namespace pgroup {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Base for every resource-limit failure (mapped to exit code 3 by the CLI).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class SearchBudgetExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class NotAPGroup : public Error {
 public:
  using Error::Error;
};

class EvenPrime : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure of the greedy Oliver-subgroup computation.
class CertificateInvalid : public Error {
 public:
  using Error::Error;
};

/// Two incomparable maximal admissible subgroups were found. Carries both.
class NonUniqueMaximal : public Error {
 public:
  NonUniqueMaximal(std::string what, std::vector<Elem> first, std::vector<Elem> second)
      : Error(std::move(what)), first_(std::move(first)), second_(std::move(second)) {}

  const std::vector<Elem>& first() const { return first_; }
  const std::vector<Elem>& second() const { return second_; }

 private:
  std::vector<Elem> first_;
  std::vector<Elem> second_;
};

/// Malformed group definition text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pgroup
