#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateElementError : public Error {
 public:
  DegenerateElementError(std::int64_t element_id, const std::string& what)
      : Error(what), element_id_(element_id) {}
  std::int64_t element_id() const noexcept { return element_id_; }

 private:
  std::int64_t element_id_;
};

/// Malformed input file. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& what)
      : Error(file + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        file_(std::move(file)),
        line_(line) {}
  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

/// Solver or optimizer failure.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcf
