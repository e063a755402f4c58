#pragma once

#include <stdexcept>
#include <string>

namespace parikh {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word text, unknown letter, bad exponent.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arguments violate an operation's precondition (alphabet mismatch, length
/// mismatch, singleton class where an ambiguous one is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A fixed-width count would have wrapped.
class OverflowError : public Error {
 public:
  OverflowError() : Error("count overflow: word too long for exact 64-bit counting") {}
};

/// Checked unsigned arithmetic for counts.
template <class T>
T checked_add(T lhs, T rhs) {
  T out;
  if (__builtin_add_overflow(lhs, rhs, &out)) throw OverflowError();
  return out;
}

template <class T>
T checked_mul(T lhs, T rhs) {
  T out;
  if (__builtin_mul_overflow(lhs, rhs, &out)) throw OverflowError();
  return out;
}

}  // namespace parikh
