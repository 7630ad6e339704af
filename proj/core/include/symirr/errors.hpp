#pragma once

#include <stdexcept>
#include <string>

namespace symirr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed literal, JSON or partition text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally inconsistent table or fusion data.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Arguments outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace symirr
