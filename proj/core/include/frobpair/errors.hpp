#pragma once

#include <stdexcept>
#include <string>

namespace frobpair {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Domain/codomain or matrix-shape mismatch; the message names both sides.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Operands live over different ground fields.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// A morphism expected to be invertible is not; carries the first offending
/// degree (blocks are scanned degree-ascending).
class SingularError : public Error {
 public:
  SingularError(const std::string& what, int degree) : Error(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

/// Out-of-range coordinate (mutation, block access).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An algebra presentation fails one of its invariants (unit, associativity,
/// grading, commutativity where required). Witness indices identify the
/// offending basis pair.
class PresentationError : public Error {
 public:
  PresentationError(const std::string& what, int i = -1, int j = -1)
      : Error(what), i_(i), j_(j) {}
  int witness_i() const { return i_; }
  int witness_j() const { return j_; }

 private:
  int i_, j_;
};

/// The trace pairing of a would-be Frobenius object is singular. The message
/// embeds an exact kernel vector.
class DegeneratePairingError : public Error {
 public:
  using Error::Error;
};

/// A builder's output failed its own re-verification.
class BuilderError : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed; 1-based line/column point at the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int col)
      : Error(what), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

/// A term or statement parsed but does not typecheck; carries the source line.
class TypeError : public Error {
 public:
  TypeError(const std::string& what, int line = 0) : Error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace frobpair
