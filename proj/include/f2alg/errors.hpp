#pragma once

#include <stdexcept>
#include <string>

namespace f2alg {

// Base of all library errors. The CLI maps any of these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError() : Error("matrix is singular over GF(2)") {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class UnknownNameError : public Error {
 public:
  explicit UnknownNameError(const std::string& name)
      : Error("unknown algebra name: " + name) {}
};

class UnknownFilterError : public Error {
 public:
  explicit UnknownFilterError(const std::string& name)
      : Error("unknown family filter: " + name) {}
};

}  // namespace f2alg
