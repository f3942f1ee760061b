#pragma once

#include <stdexcept>
#include <string>

namespace splitauth {

// Precondition violations (index out of range, s > t, t > u, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Structurally invalid objects: overlapping parts, ragged blocks, bad weights.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed JSON or rational strings.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace splitauth
