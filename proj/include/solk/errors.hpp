#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solk {

// Base for every failure the library reports. Derived types name the stage
// that failed so callers (and the CLI) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

// T·B does not lie in the column lattice of B.
class NotInvariant : public Error {
 public:
  using Error::Error;
};

// The K1 edge rule does not descend to the cokernel.
class NotWellDefined : public Error {
 public:
  using Error::Error;
};

// Some vertex carries no occurring germ class.
class UnreachableVertex : public Error {
 public:
  using Error::Error;
};

// Hausdorff and connected quotient but preimage counts differ between cells.
class DegreeNotConstant : public Error {
 public:
  using Error::Error;
};

// Presentation failed validation and cannot be fed to the pipeline.
class InvalidPresentation : public Error {
 public:
  using Error::Error;
};

}  // namespace solk
