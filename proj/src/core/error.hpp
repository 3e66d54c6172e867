#pragma once

#include <stdexcept>
#include <string>

namespace reeb {

enum class ErrorCode {
  Parse,
  InvalidGraph,
  InvalidArgument,
  Precondition,
  Io,
  Internal,
};

/// Base exception of the library. The C API maps `code()` onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what) {}
};

class InvalidGraph : public Error {
 public:
  explicit InvalidGraph(const std::string& what) : Error(ErrorCode::InvalidGraph, what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(const std::string& what) : Error(ErrorCode::Precondition, what) {}
};

}  // namespace reeb
