#include "qramsey/rational.hpp"

#include <sstream>

namespace qramsey {

namespace {

mpq_class parse_fraction(const std::string& text) {
  auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("rational literal: expected \"a/b\" or \"a\", got \"" + text + "\"");
  };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (num.empty() || den.empty()) throw bad();
  for (const std::string* part : {&num, &den})
    for (char c : *part)
      if (c < '0' || c > '9') throw bad();
  mpq_class q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0) throw bad();
  q.canonicalize();
  return q;
}

std::string fraction_str(const mpq_class& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace

NonnegRational NonnegRational::parse(const std::string& text) {
  return NonnegRational(parse_fraction(text));
}

PosRational PosRational::parse(const std::string& text) {
  return PosRational(parse_fraction(text));
}

PosRational NonnegRational::to_positive() const {
  if (is_zero()) throw std::invalid_argument("rational: zero is not in Q_+");
  return PosRational(v_);
}

BigInt NonnegRational::height() const {
  BigInt n = numerator(), d = denominator();
  return n > d ? n : d;
}

BigInt PosRational::height() const {
  BigInt n = numerator(), d = denominator();
  return n > d ? n : d;
}

std::string NonnegRational::str() const { return fraction_str(v_); }
std::string PosRational::str() const { return fraction_str(v_); }

PosRational PosRational::pow(long exponent) const {
  if (exponent == 0) return PosRational::one();
  mpq_class base = exponent > 0 ? v_ : mpq_class(1 / v_);
  unsigned long e = exponent > 0 ? static_cast<unsigned long>(exponent)
                                 : static_cast<unsigned long>(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  return PosRational(num, den);
}

long val2(const PosRational& q) {
  // in canonical form only one side is even, but scan both anyway
  long vn = static_cast<long>(mpz_scan1(q.numerator().get_mpz_t(), 0));
  long vd = static_cast<long>(mpz_scan1(q.denominator().get_mpz_t(), 0));
  return vn - vd;
}

RatVector RatVector::parse(const std::string& csv) {
  std::vector<PosRational> entries;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) entries.push_back(PosRational::parse(item));
  return RatVector(std::move(entries));
}

std::string RatVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i].str();
  }
  return out;
}

RatVector scale(const PosRational& q, const RatVector& v) {
  std::vector<PosRational> out;
  out.reserve(v.size());
  for (const auto& e : v.entries()) out.push_back(q * e);
  return RatVector(std::move(out));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t hash_value(const BigInt& z) {
  std::uint64_t h = static_cast<std::uint64_t>(z.get_mpz_t()->_mp_size);
  const mp_limb_t* limbs = mpz_limbs_read(z.get_mpz_t());
  std::size_t n = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < n; ++i) h = splitmix64(h ^ static_cast<std::uint64_t>(limbs[i]));
  return h;
}

std::uint64_t hash_value(const PosRational& q) {
  return splitmix64(hash_value(q.numerator()) ^ (hash_value(q.denominator()) * 0x9e3779b97f4a7c15ULL));
}

std::uint64_t hash_value(const NonnegRational& q) {
  return splitmix64(hash_value(q.numerator()) ^ (hash_value(q.denominator()) * 0x9e3779b97f4a7c15ULL));
}

}  // namespace qramsey
