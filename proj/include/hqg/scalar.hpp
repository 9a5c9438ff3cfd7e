#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "hqg/errors.hpp"

namespace hqg {

/// The coefficient field: the rationals, or GF(p) for a prime p.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }

  static FieldSpec prime(std::uint64_t p) {
    mpz_class z(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
      throw FieldError("GF(p) requires a prime modulus, got " + std::to_string(p));
    FieldSpec f;
    f.p_ = p;
    return f;
  }

  /// Accepts "Q" or "GF:p".
  static FieldSpec parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.substr(0, 3) == "GF:") {
      std::string digits{text.substr(3)};
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw FieldError("bad field \"" + std::string(text) + "\"");
      return prime(std::stoull(digits));
    }
    throw FieldError("bad field \"" + std::string(text) + "\" (expected Q or GF:p)");
  }

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  std::string to_string() const { return p_ == 0 ? "Q" : "GF:" + std::to_string(p_); }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint64_t p_ = 0;
};

/// An exact element of a FieldSpec.
///
/// Rationals are kept canonical (lowest terms, positive denominator) by GMP;
/// residues mod p are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(FieldSpec field, long n) : field_(field), value_(n) { reduce(); }
  Scalar(FieldSpec field, mpq_class q) : field_(field), value_(std::move(q)) {
    value_.canonicalize();
    reduce();
  }

  static Scalar zero(FieldSpec f) { return Scalar(f, 0L); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1L); }

  /// Parses "n", "-n", "n/d" (rationals) or an integer residue (prime fields).
  static Scalar parse(FieldSpec f, std::string_view text) {
    std::string s{text};
    auto valid_int = [](std::string_view t) {
      if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
      return !t.empty() && t.find_first_not_of("0123456789") == std::string_view::npos;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      if (!valid_int(s)) throw FieldError("bad coefficient \"" + s + "\"");
      return Scalar(f, mpq_class(mpz_class(s[0] == '+' ? s.substr(1) : s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
      throw FieldError("bad coefficient \"" + s + "\"");
    mpz_class d(den);
    if (d == 0) throw FieldError("zero denominator in \"" + s + "\"");
    mpz_class n(num[0] == '+' ? num.substr(1) : num);
    if (!f.is_rational()) return Scalar(f, mpq_class(n)) / Scalar(f, mpq_class(d));
    return Scalar(f, mpq_class(n, d));
  }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  /// The canonical text form used in files and reports.
  std::string to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Scalar operator-() const { return Scalar(field_, mpq_class(-value_)); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    a.same_field(b);
    return Scalar(a.field_, mpq_class(a.value_ + b.value_));
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    a.same_field(b);
    return Scalar(a.field_, mpq_class(a.value_ - b.value_));
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    a.same_field(b);
    return Scalar(a.field_, mpq_class(a.value_ * b.value_));
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    a.same_field(b);
    if (b.is_zero()) throw FieldError("division by zero");
    if (a.field_.is_rational()) return Scalar(a.field_, mpq_class(a.value_ / b.value_));
    mpz_class inv, p(static_cast<unsigned long>(a.field_.characteristic()));
    mpz_invert(inv.get_mpz_t(), b.value_.get_num_mpz_t(), p.get_mpz_t());
    return Scalar(a.field_, mpq_class(a.value_.get_num() * inv));
  }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  /// Rational value (a residue in [0,p) for prime fields).
  const mpq_class& value() const { return value_; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  void reduce() {
    if (field_.is_rational()) return;
    mpz_class p(static_cast<unsigned long>(field_.characteristic()));
    mpz_class n = value_.get_num();
    mpz_class d = value_.get_den();
    if (d != 1) {
      mpz_class dm = d % p;
      if (dm == 0) throw FieldError("denominator divisible by the characteristic");
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), p.get_mpz_t());
      n *= inv;
    }
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    value_ = mpq_class(r);
  }

  void same_field(const Scalar& b) const {
    if (!(field_ == b.field_))
      throw FieldError("scalar field mismatch: " + field_.to_string() + " vs " + b.field_.to_string());
  }

  FieldSpec field_;
  mpq_class value_;
};

}  // namespace hqg
