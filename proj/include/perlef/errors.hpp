#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace perlef {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedInput : public Error {
 public:
  MalformedInput(std::string field, const std::string& what)
      : Error("malformed input at '" + field + "': " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class NonSquareMatrix : public Error {
 public:
  explicit NonSquareMatrix(int degree)
      : Error("matrix for degree " + std::to_string(degree) + " is not square"), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

class NonIntegerEntry : public Error {
 public:
  NonIntegerEntry(int degree, std::size_t row, std::size_t col)
      : Error("entry (" + std::to_string(row) + "," + std::to_string(col) + ") of degree " +
              std::to_string(degree) + " is not an integer"),
        degree_(degree), row_(row), col_(col) {}
  int degree() const noexcept { return degree_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  int degree_;
  std::size_t row_, col_;
};

class BadDegreeZero : public Error {
 public:
  BadDegreeZero() : Error("degree-0 matrix must be the 1x1 identity (connected manifold)") {}
};

class ZeroConstantTerm : public Error {
 public:
  ZeroConstantTerm() : Error("polynomial has zero constant term") {}
};

class RootOnCircle : public Error {
 public:
  RootOnCircle()
      : Error("polynomial shares roots with its reciprocal; remove the self-inversive part first") {}
};

class DegenerateEpsilon : public Error {
 public:
  DegenerateEpsilon() : Error("epsilon must satisfy 0 < epsilon < 2") {}
};

class HypothesisShapeViolated : public Error {
 public:
  explicit HypothesisShapeViolated(const std::string& detail)
      : Error("homology action violates the theorem hypotheses: " + detail) {}
};

class WitnessNotFound : public Error {
 public:
  explicit WitnessNotFound(std::uint64_t cap)
      : Error("no admissibility violation found up to m = " + std::to_string(cap)), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

class EvaluationOverflow : public Error {
 public:
  EvaluationOverflow() : Error("map evaluation produced a non-finite value") {}
};

class PreconditionNotStrictlyInside : public Error {
 public:
  explicit PreconditionNotStrictlyInside(double margin)
      : Error("map does not send the domain strictly inside itself (margin " +
              std::to_string(margin) + ")"),
        margin_(margin) {}
  double margin() const noexcept { return margin_; }

 private:
  double margin_;
};

}  // namespace perlef
