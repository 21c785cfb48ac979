#pragma once

#include <stdexcept>
#include <string>

namespace subconvex {

// Every failure raised by the library derives from Error so callers (the
// suite runner in particular) can catch one type and record the message.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

// Table cap exceeded when building coefficient tables.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class TableTooShort : public Error {
 public:
  TableTooShort(std::size_t required, std::size_t available)
      : Error("coefficient table too short: need n_max >= " +
              std::to_string(required) + ", have " +
              std::to_string(available)),
        required_(required) {}
  std::size_t required() const { return required_; }

 private:
  std::size_t required_;
};

class NonInvertible : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class EmptyFamily : public Error {
 public:
  using Error::Error;
};

class InsufficientPrimes : public Error {
 public:
  using Error::Error;
};

class InvalidModulus : public Error {
 public:
  using Error::Error;
};

class UnsupportedWeight : public Error {
 public:
  using Error::Error;
};

class NonPrimitive : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace subconvex
