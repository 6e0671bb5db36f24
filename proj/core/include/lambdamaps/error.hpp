#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lambdamaps {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed concrete syntax. `offset` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// No planar linear binding exists for a skeleton.
class MatchFailure : public Error {
 public:
  using Error::Error;
};

class NotReducible : public Error {
 public:
  using Error::Error;
};

class InvalidReduced : public Error {
 public:
  using Error::Error;
};

// An operation received a value outside its documented domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidMap : public Error {
 public:
  using Error::Error;
};

class WouldDisconnect : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class EmptyMap : public Error {
 public:
  using Error::Error;
};

class SizeTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace lambdamaps
