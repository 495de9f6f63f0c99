#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace absorb {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Cayley table entry lies outside [0, n).
class OutOfRangeEntry : public Error {
 public:
  OutOfRangeEntry(std::size_t row, std::size_t col, long long value, std::size_t n)
      : Error("table entry at cell (" + std::to_string(row) + "," + std::to_string(col) +
              ") is " + std::to_string(value) + ", outside [0," + std::to_string(n) + ")"),
        row(row),
        col(col) {}
  std::size_t row;
  std::size_t col;
};

/// First lexicographic triple (i,j,k) with (i+j)+k != i+(j+k).
class AssociativityViolation : public Error {
 public:
  AssociativityViolation(std::size_t i, std::size_t j, std::size_t k)
      : Error("associativity fails at triple (" + std::to_string(i) + "," + std::to_string(j) +
              "," + std::to_string(k) + "): (i+j)+k != i+(j+k)"),
        i(i),
        j(j),
        k(k) {}
  std::size_t i;
  std::size_t j;
  std::size_t k;
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(std::size_t index, std::size_t n)
      : Error("element index " + std::to_string(index) + " outside universe of size " +
              std::to_string(n)) {}
};

class UniverseMismatch : public Error {
 public:
  UniverseMismatch(std::size_t a, std::size_t b)
      : Error("element sets bound to different universes (" + std::to_string(a) + " vs " +
              std::to_string(b) + ")") {}
};

class UnknownFamily : public Error {
 public:
  explicit UnknownFamily(const std::string& tag) : Error("unknown generator family: " + tag) {}
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

/// Transformation closure grew past the element cap; retry with a new seed.
class SizeExplosion : public Error {
 public:
  explicit SizeExplosion(std::size_t limit)
      : Error("closure exceeds " + std::to_string(limit) + " elements") {}
};

class NTooLarge : public Error {
 public:
  explicit NTooLarge(std::size_t n)
      : Error("exhaustive enumeration supports n <= 4, got n = " + std::to_string(n)) {}
};

class NotAnIdeal : public Error {
 public:
  explicit NotAnIdeal(const std::string& which) : Error(which + " is not a two-sided ideal") {}
};

class ANotProper : public Error {
 public:
  ANotProper() : Error("ideal A must be a proper subset of W") {}
};

class EmptyB : public Error {
 public:
  EmptyB() : Error("reference subset B must be non-empty") {}
};

class TooManyJClasses : public Error {
 public:
  explicit TooManyJClasses(std::size_t count)
      : Error("ideal enumeration guard: " + std::to_string(count) + " J-classes exceeds 24") {}
};

class NotIdempotent : public Error {
 public:
  explicit NotIdempotent(std::size_t e)
      : Error("element " + std::to_string(e) + " is not idempotent") {}
  explicit NotIdempotent(const std::string& what) : Error(what + " is not idempotent") {}
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NotClosed : public Error {
 public:
  NotClosed(std::size_t i, std::size_t j)
      : Error("family not closed under the operation: witness pair (" + std::to_string(i) +
              "," + std::to_string(j) + ")"),
        i(i),
        j(j) {}
  std::size_t i;
  std::size_t j;
};

class BadK : public Error {
 public:
  using Error::Error;
};

// setopt-specific
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t a, std::size_t b)
      : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class DimensionUnsupported : public Error {
 public:
  explicit DimensionUnsupported(std::size_t d)
      : Error("operation requires d = 2, got d = " + std::to_string(d)) {}
};

class ZeroNormal : public Error {
 public:
  ZeroNormal() : Error("normal vector must be non-zero") {}
};

class NormalNotInDualCone : public Error {
 public:
  NormalNotInDualCone() : Error("normal vector does not lie in the dual cone C+") {}
};

class BadZ : public Error {
 public:
  BadZ() : Error("z must satisfy y.z = 1") {}
};

}  // namespace absorb
