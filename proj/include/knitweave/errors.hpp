#pragma once

#include <stdexcept>
#include <string>

namespace knitweave {

/// Malformed textual input; carries a 1-based line/column when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " + what : what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A PD code whose ports do not close up into oriented curves.
class InvalidDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonPlanarDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A knitted template that fails validate(); the message lists the failures.
class InvalidTemplate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace knitweave
