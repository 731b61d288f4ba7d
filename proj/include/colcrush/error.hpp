#pragma once

#include <stdexcept>
#include <string>

namespace colcrush {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or truncated column / encoded-column file.
class FormatError : public Error {
 public:
  using Error::Error;
};

class UnknownCodecError : public Error {
 public:
  using Error::Error;
};

// Predicate operand kind differs from the column kind, or a code-space
// predicate is applied against a dictionary it was not rewritten for.
class TypeMismatchError : public Error {
 public:
  using Error::Error;
};

class UnsortedColumnError : public Error {
 public:
  UnsortedColumnError() : Error("run-length encoding requires sorted column") {}
};

class CorruptStreamError : public Error {
 public:
  using Error::Error;
};

}  // namespace colcrush
