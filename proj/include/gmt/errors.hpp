#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gmt {

// Base for every error raised by the library. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid indices, duplicated simplices, malformed incidence.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Zero-area triangles, collinear triples.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// Arguments outside the documented range of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Integer coefficient arithmetic left the int64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// The LP reported an outcome that is impossible for a well-posed flat norm problem.
class SolverIntegrityError : public Error {
 public:
  using Error::Error;
};

// Best-fit circle has no solution for the requested mean area.
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

// Direct search could not find any feasible point around the start.
class InfeasibleStartError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gmt
