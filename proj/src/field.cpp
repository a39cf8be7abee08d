#include "qmod/field.hpp"

#include <cassert>
#include <cmath>
#include <functional>

#include "qmod/error.hpp"

namespace qmod {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::BadRelation: return "BadRelation";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSubmodule: return "NotSubmodule";
    case ErrorKind::FieldNotFinite: return "FieldNotFinite";
    case ErrorKind::SearchTooLarge: return "SearchTooLarge";
    case ErrorKind::NotOnChart: return "NotOnChart";
    case ErrorKind::EquationsViolated: return "EquationsViolated";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::IdealNotGraded: return "IdealNotGraded";
    case ErrorKind::SingularBlock: return "SingularBlock";
    case ErrorKind::NotSemistable: return "NotSemistable";
    case ErrorKind::TopMismatch: return "TopMismatch";
    case ErrorKind::NotNilpotentDirection: return "NotNilpotentDirection";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
  }
  return "Error";
}

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw Error(ErrorKind::InvalidArgument, "field order " + std::to_string(p) + " is not a supported prime");
  return Field(p);
}

Field Field::parse(const std::string& name) {
  if (name == "Q") return rationals();
  if (name.size() >= 2 && name[0] == 'F') {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') throw Error(ErrorKind::InvalidArgument, "bad field name '" + name + "'");
      p = p * 10 + static_cast<std::uint64_t>(name[i] - '0');
      if (p > (1ull << 31)) throw Error(ErrorKind::InvalidArgument, "field order too large");
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw Error(ErrorKind::InvalidArgument, "bad field name '" + name + "'");
}

std::string Field::name() const { return p_ ? "F" + std::to_string(p_) : "Q"; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  Scalar s;
  if (p_) {
    s.q_.reset();
    s.p_ = p_;
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    s.r_ = static_cast<std::uint32_t>(r);
  } else {
    s.q_ = mpq_class(static_cast<long>(v));
  }
  return s;
}

Scalar Field::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (!p_) {
    Scalar s;
    s.q_ = mpq_class(num, den);
    s.q_->canonicalize();
    return s;
  }
  mpz_class n = num % p_, d = den % p_;
  if (n < 0) n += p_;
  if (d < 0) d += p_;
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "denominator vanishes in " + name());
  return from_int(n.get_si()) / from_int(d.get_si());
}

Scalar Field::element(std::uint64_t index) const {
  if (!p_) return from_int(static_cast<long long>(index));
  return from_int(static_cast<long long>(index % p_));
}

Scalar Field::random(std::mt19937_64& rng, int bound) const {
  if (p_) return from_int(static_cast<long long>(rng() % p_));
  std::uniform_int_distribution<int> dist(-bound, bound);
  return from_int(dist(rng));
}

Field Scalar::field() const { return Field(p_); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_)
    s.r_ = r_ ? p_ - r_ : 0;
  else
    *s.q_ = -*q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  assert(p_ == o.p_);
  if (p_)
    r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + o.r_) % p_);
  else
    *q_ += *o.q_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  assert(p_ == o.p_);
  if (p_)
    r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + p_ - o.r_) % p_);
  else
    *q_ -= *o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  assert(p_ == o.p_);
  if (p_)
    r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % p_);
  else
    *q_ *= *o.q_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ ? a.r_ == b.r_ : *a.q_ == *b.q_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  Scalar s = *this;
  if (p_)
    s.r_ = mod_pow(r_, p_ - 2, p_);
  else
    *s.q_ = 1 / *q_;
  return s;
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = field().one();
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (p_) return std::to_string(r_);
  return q_->get_str();
}

double Scalar::to_double() const { return p_ ? static_cast<double>(r_) : q_->get_d(); }

bool less(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  return a.p_ ? a.r_ < b.r_ : *a.q_ < *b.q_;
}

std::size_t Scalar::hash() const {
  if (p_) return std::hash<std::uint32_t>{}(r_) ^ (static_cast<std::size_t>(p_) << 32);
  return std::hash<std::string>{}(q_->get_str());
}

}  // namespace qmod
