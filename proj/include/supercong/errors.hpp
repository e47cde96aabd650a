#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

enum class ErrorKind {
  NotInvertible,
  NotPIntegral,
  DividesBase,
  OutOfRange,
  DivisionByZeroValue,
  NoReconstruction,
  NonIntegral,
  TopOutOfRange,
  NormalizationImpossible,
  UnboundSymbol,
  ParseError,
  Inconsistent,
  BadConfig,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry a source location.
class ParseError : public Error {
 public:
  ParseError(int line, int col, std::string msg)
      : Error(ErrorKind::ParseError,
              "parse error at " + std::to_string(line) + ":" +
                  std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

const char* error_kind_name(ErrorKind k);

}  // namespace supercong
