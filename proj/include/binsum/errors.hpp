#pragma once

#include <stdexcept>
#include <string>

namespace binsum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CompositeModulus : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

// k == n: F_{k,k} vanishes identically.
class DegenerateFamily : public Error {
 public:
  using Error::Error;
};

// An exact identity that must hold failed; always an implementation bug.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

class MissingInput : public Error {
 public:
  using Error::Error;
};

class NoApplicableInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace binsum
