#pragma once

#include <stdexcept>
#include <string>

namespace weylhom {

/// A caller violated a documented precondition (bad rank, negative s, ...).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Text input did not match the expected grammar.
class ParseError : public ValidationError {
public:
  ParseError(const std::string& production, const std::string& what)
      : ValidationError("parse error in <" + production + ">: " + what), production_(production) {}

  const std::string& production() const noexcept { return production_; }

private:
  std::string production_;
};

/// A finite computation could not decide its question (window or budget too small).
class InconclusiveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Right multiplication left the truncation window of a bimodule.
class WindowOverflow : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace weylhom
