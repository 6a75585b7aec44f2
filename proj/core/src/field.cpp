#include "frobpair/field.hpp"

#include <array>

namespace frobpair {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Extended Euclid; p prime, 0 < a < p.
u64 invmod(u64 a, u64 p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<u64>(t);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality for every 64-bit integer.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(u64 p) {
  if (!is_prime_u64(p)) {
    throw Error("prime_field: modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::str() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "F" + std::to_string(modulus_);
}

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.q_ = BigRational(v);
  } else {
    auto p = static_cast<std::int64_t>(f.modulus());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    s.r_ = static_cast<u64>(r);
  }
  return s;
}

Scalar Scalar::from_big(const FieldSpec& f, const BigInt& v) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.q_ = BigRational(v);
  } else {
    BigInt r = v % BigInt(f.modulus());
    if (r < 0) r += BigInt(f.modulus());
    s.r_ = r.convert_to<u64>();
  }
  return s;
}

Scalar Scalar::rational(const FieldSpec& f, const BigRational& q) {
  if (!f.is_rationals()) throw Error("Scalar::rational: field is not Q");
  Scalar s(f);
  s.q_ = q;
  return s;
}

Scalar Scalar::fraction(const FieldSpec& f, long long num, long long den) {
  if (den == 0) throw Error("Scalar::fraction: zero denominator");
  if (f.is_rationals()) {
    Scalar s(f);
    s.q_ = BigRational(BigInt(num), BigInt(den));
    return s;
  }
  return from_int(f, num) * from_int(f, den).inverse();
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  auto bad = [&]() -> Error { return Error("cannot parse scalar '" + text + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return from_big(f, BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den <= 0) throw bad();
    if (f.is_rationals()) {
      Scalar s(f);
      s.q_ = BigRational(num, den);
      return s;
    }
    return from_big(f, num) * from_big(f, den).inverse();
  } catch (const std::exception&) {
    throw bad();
  }
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? q_ == 1 : r_ == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_) {
    throw FieldMismatchError("scalar fields differ: " + field_.str() + " vs " + o.field_.str());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.q_ = q_ + o.q_;
  } else {
    u64 p = field_.modulus();
    s.r_ = (r_ + o.r_) % p;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.q_ = q_ * o.q_;
  } else {
    s.r_ = mulmod(r_, o.r_, field_.modulus());
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("Scalar::inverse: division by zero");
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = invmod(r_, field_.modulus());
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (!field_.is_rationals()) return std::to_string(r_);
  std::string n = numerator(q_).str();
  if (denominator(q_) == 1) return n;
  return n + "/" + denominator(q_).str();
}

}  // namespace frobpair
