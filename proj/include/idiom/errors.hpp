#pragma once

#include <stdexcept>
#include <string>

namespace idiom {

enum class Err {
  NotALattice,
  NoBoundedTop,
  NoBoundedBottom,
  DuplicateLabel,
  CyclicCovers,
  UnknownLabel,
  OutOfInterval,
  SizeCapExceeded,
  NotAFreeSeed,
  MissingTop,
  NotADivisionSet,
  NotAFreeSet,
  InternalDisagreement,
  NotApplicable,
  Syntax,
};

class IdiomError : public std::runtime_error {
public:
  IdiomError(Err kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  Err kind() const { return kind_; }

private:
  Err kind_;
};

/// Parse failure with a 1-based source position.
class ParseError : public IdiomError {
public:
  ParseError(int line, int col, const std::string& msg)
      : IdiomError(Err::Syntax,
                   "line " + std::to_string(line) + ", col " +
                       std::to_string(col) + ": " + msg),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) {
  throw IdiomError(kind, msg);
}

}  // namespace idiom
