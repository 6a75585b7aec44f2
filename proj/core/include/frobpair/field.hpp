#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "frobpair/errors.hpp"

namespace frobpair {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// The ground field: the rationals, or a prime field F_p.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

  /// Throws Error unless p is prime (deterministic Miller-Rabin, valid for
  /// all 64-bit inputs).
  static FieldSpec prime_field(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  /// "Q" or "F<p>".
  std::string str() const;

 private:
  FieldSpec(Kind k, std::uint64_t m) : kind_(k), modulus_(m) {}
  Kind kind_;
  std::uint64_t modulus_;
};

bool is_prime_u64(std::uint64_t n);

/// An exact field element: a normalized arbitrary-precision rational, or a
/// residue in [0, p). Every value knows its field; mixing fields throws
/// FieldMismatchError.
class Scalar {
 public:
  static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec& f, long long v);
  static Scalar from_big(const FieldSpec& f, const BigInt& v);
  /// Rationals only.
  static Scalar rational(const FieldSpec& f, const BigRational& q);
  static Scalar fraction(const FieldSpec& f, long long num, long long den);
  /// Parses "a", "-a", or "a/b" (rationals), or an integer residue (prime
  /// field; reduced mod p, negatives allowed).
  static Scalar parse(const FieldSpec& f, const std::string& text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  /// Multiplicative inverse; throws Error on zero.
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text: rationals as "n" or "n/d" (gcd-reduced, d > 0), prime
  /// field as the decimal residue.
  std::string str() const;

  const BigRational& rational_value() const { return q_; }
  std::uint64_t residue_value() const { return r_; }

 private:
  explicit Scalar(const FieldSpec& f) : field_(f) {}
  void require_same_field(const Scalar& o) const;

  FieldSpec field_ = FieldSpec::rationals();
  BigRational q_;
  std::uint64_t r_ = 0;
};

}  // namespace frobpair
