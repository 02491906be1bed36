#pragma once

#include <stdexcept>

namespace appell {

/// Malformed external input (custom-moment documents and files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter outside the mathematical domain, e.g. beta not in [0,1].
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Unknown selector or malformed descriptor string.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace appell
