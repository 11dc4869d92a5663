#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class JacobiViolation : public Error {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, std::vector<std::string> defect,
                  const std::string& what)
      : Error(what), i(i), j(j), k(k), defect(std::move(defect)) {}
  std::size_t i, j, k;
  std::vector<std::string> defect;  // defect vector entries as exact rationals
};

class AntisymmetryViolation : public Error {
 public:
  AntisymmetryViolation(std::size_t i, std::size_t j, const std::string& what) : Error(what), i(i), j(j) {}
  std::size_t i, j;
};

class NotSubalgebra : public Error {
 public:
  using Error::Error;
};

class NotIdeal : public Error {
 public:
  using Error::Error;
};

/// A characteristic polynomial does not split over Q(i).
class NonRationalSpectrum : public Error {
 public:
  NonRationalSpectrum(std::string map, const std::string& what) : Error(what), map(std::move(map)) {}
  std::string map;
};

class NotCoabelianIdeal : public Error {
 public:
  using Error::Error;
};

class FlagInvalid : public Error {
 public:
  using Error::Error;
};

class NotGeneralPosition : public Error {
 public:
  using Error::Error;
};

class NonlinearExponentSubstitution : public Error {
 public:
  using Error::Error;
};

class InconsistentExponentialAssignment : public Error {
 public:
  using Error::Error;
};

class InvariantNotVanishing : public Error {
 public:
  using Error::Error;
};

class CoordinateMismatch : public Error {
 public:
  using Error::Error;
};

class RepCheckFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + message),
        line(line),
        col(col),
        message(message) {}
  std::size_t line, col;
  std::string message;
};

}  // namespace orbitkit
