// Exact scalars: the rationals (GMP) or a prime field F_p chosen at runtime.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include <gmpxx.h>

namespace qmod {

class Scalar;

/// Ground field descriptor. `p == 0` denotes the rationals.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(0); }
  /// Throws InvalidArgument unless p is prime and fits in 31 bits.
  static Field prime(std::uint32_t p);
  /// Parses "Q" or "F<p>".
  static Field parse(const std::string& name);

  bool is_finite() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }
  /// Number of elements; 0 for Q.
  std::uint64_t order() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_ratio(const mpz_class& num, const mpz_class& den) const;
  /// The index-th element of F_p in the order 0, 1, ..., p-1.
  Scalar element(std::uint64_t index) const;
  /// Uniform on F_p; over Q a small integer in [-bound, bound].
  Scalar random(std::mt19937_64& rng, int bound = 20) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// A field element. Rational values live in an mpq_class; F_p values are a
/// residue in [0, p). Binary operations require both operands over the same field.
class Scalar {
 public:
  /// The rational zero.
  Scalar() : q_(mpq_class(0)) {}

  Field field() const;
  bool is_zero() const { return p_ ? r_ == 0 : sgn(*q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : *q_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(long long e) const;

  /// "p/q" (or "p" when q = 1) over Q; the residue over F_p.
  std::string to_string() const;
  /// Nearest double (used only for numeric root seeding).
  double to_double() const;
  /// Total order used for canonical sorting: residues, or rational comparison.
  friend bool less(const Scalar& a, const Scalar& b);
  std::size_t hash() const;

  const mpq_class& rational() const { return *q_; }
  std::uint32_t residue() const { return r_; }

 private:
  friend class Field;
  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
  std::optional<mpq_class> q_;
};

}  // namespace qmod
