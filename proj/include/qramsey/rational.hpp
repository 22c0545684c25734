#pragma once

// Exact positive / nonnegative rational arithmetic over GMP.
//
// Values are canonical (gcd(num, den) = 1, den >= 1) from construction on,
// so equality is structural and hashing is exact. Zero is only representable
// as NonnegRational; PosRational excludes it at the type level.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qramsey {

using BigInt = mpz_class;

class PosRational;

class NonnegRational {
public:
  NonnegRational() : v_(0) {}
  explicit NonnegRational(long n) : v_(n) { require_nonneg(); }
  NonnegRational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_.canonicalize();
    require_nonneg();
  }
  NonnegRational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_.canonicalize();
    require_nonneg();
  }
  explicit NonnegRational(const mpq_class& q) : v_(q) {
    v_.canonicalize();
    require_nonneg();
  }

  // Text literal "a/b" or "a", decimal digits only.
  static NonnegRational parse(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  // max(numerator, denominator); the enumeration/search size measure.
  BigInt height() const;

  PosRational to_positive() const;

  std::string str() const;

  friend NonnegRational operator+(const NonnegRational& a, const NonnegRational& b) {
    return NonnegRational(mpq_class(a.v_ + b.v_), unchecked{});
  }
  friend NonnegRational operator*(const NonnegRational& a, const NonnegRational& b) {
    return NonnegRational(mpq_class(a.v_ * b.v_), unchecked{});
  }
  friend bool operator==(const NonnegRational& a, const NonnegRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const NonnegRational& a, const NonnegRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const NonnegRational& a, const NonnegRational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const NonnegRational& a, const NonnegRational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const NonnegRational& a, const NonnegRational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const NonnegRational& a, const NonnegRational& b) { return a.v_ >= b.v_; }

private:
  struct unchecked {};
  NonnegRational(mpq_class q, unchecked) : v_(std::move(q)) {}
  void require_nonneg() const {
    if (sgn(v_) < 0) throw std::invalid_argument("rational: negative value");
  }
  mpq_class v_;
  friend class PosRational;
};

class PosRational {
public:
  PosRational() : v_(1) {}
  explicit PosRational(long n) : v_(n) { require_pos(); }
  PosRational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_.canonicalize();
    require_pos();
  }
  PosRational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_.canonicalize();
    require_pos();
  }
  explicit PosRational(const mpq_class& q) : v_(q) {
    v_.canonicalize();
    require_pos();
  }

  static PosRational parse(const std::string& text);
  static PosRational one() { return PosRational(); }

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  const mpq_class& raw() const { return v_; }
  BigInt height() const;

  NonnegRational as_nonneg() const { return NonnegRational(v_); }

  std::string str() const;

  PosRational inverse() const { return PosRational(mpq_class(1 / v_), unchecked{}); }

  // exponent may be negative; the result stays in Q_+.
  PosRational pow(long exponent) const;

  friend PosRational operator+(const PosRational& a, const PosRational& b) {
    return PosRational(mpq_class(a.v_ + b.v_), unchecked{});
  }
  friend PosRational operator*(const PosRational& a, const PosRational& b) {
    return PosRational(mpq_class(a.v_ * b.v_), unchecked{});
  }
  friend PosRational operator/(const PosRational& a, const PosRational& b) {
    return PosRational(mpq_class(a.v_ / b.v_), unchecked{});
  }
  // positive if either input positive
  friend PosRational operator+(const PosRational& a, const NonnegRational& b) {
    return PosRational(mpq_class(a.v_ + b.raw()), unchecked{});
  }
  friend PosRational operator+(const NonnegRational& a, const PosRational& b) { return b + a; }
  friend NonnegRational operator*(const PosRational& a, const NonnegRational& b) {
    return NonnegRational(mpq_class(a.v_ * b.raw()));
  }
  friend NonnegRational operator*(const NonnegRational& a, const PosRational& b) { return b * a; }
  friend NonnegRational operator/(const NonnegRational& a, const PosRational& b) {
    return NonnegRational(mpq_class(a.raw() / b.v_));
  }

  friend bool operator==(const PosRational& a, const PosRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const PosRational& a, const PosRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const PosRational& a, const PosRational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const PosRational& a, const PosRational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const PosRational& a, const PosRational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const PosRational& a, const PosRational& b) { return a.v_ >= b.v_; }
  friend bool operator==(const PosRational& a, const NonnegRational& b) { return a.v_ == b.raw(); }
  friend bool operator==(const NonnegRational& a, const PosRational& b) { return b == a; }

private:
  struct unchecked {};
  PosRational(mpq_class q, unchecked) : v_(std::move(q)) {}
  void require_pos() const {
    if (sgn(v_) <= 0) throw std::invalid_argument("rational: value not positive");
  }
  mpq_class v_;
};

// 2-adic valuation: exponent of 2 in numerator minus exponent of 2 in denominator.
long val2(const PosRational& q);

// Vector in Q_+^n, n >= 1.
class RatVector {
public:
  explicit RatVector(std::vector<PosRational> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("RatVector: empty");
  }
  static RatVector parse(const std::string& csv);  // "2,1/3,5"

  std::size_t size() const { return entries_.size(); }
  const PosRational& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<PosRational>& entries() const { return entries_; }
  std::string str() const;

  friend bool operator==(const RatVector& a, const RatVector& b) { return a.entries_ == b.entries_; }

private:
  std::vector<PosRational> entries_;
};

// entrywise q * v_i
RatVector scale(const PosRational& q, const RatVector& v);

std::uint64_t hash_value(const BigInt& z);
std::uint64_t hash_value(const PosRational& q);
std::uint64_t hash_value(const NonnegRational& q);

}  // namespace qramsey

template <>
struct std::hash<qramsey::PosRational> {
  std::size_t operator()(const qramsey::PosRational& q) const { return qramsey::hash_value(q); }
};
template <>
struct std::hash<qramsey::NonnegRational> {
  std::size_t operator()(const qramsey::NonnegRational& q) const { return qramsey::hash_value(q); }
};
