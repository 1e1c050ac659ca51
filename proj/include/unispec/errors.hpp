#ifndef UNISPEC_ERRORS_HPP
#define UNISPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unispec {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is malformed or outside its mathematical domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (partition size, enumeration count) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a vanishing denominator that could not be cancelled.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; always a bug in the library.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void throw_invalid(const std::string& what);
[[noreturn]] void throw_bound(const std::string& what);
[[noreturn]] void throw_invariant(const std::string& what);

void require_modulus(int p);  // p >= 2
void require_prime(int p);
bool is_prime(int p);

}  // namespace unispec

#endif  // UNISPEC_ERRORS_HPP
