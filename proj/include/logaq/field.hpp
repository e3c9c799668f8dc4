#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace logaq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
///
/// Elements are always carried as `Rational`. In characteristic p every
/// normalized element is an integer in [0, p).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{0}; }

  static Field prime(unsigned long p) {
    if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0)
      throw std::invalid_argument("not a prime characteristic: " + std::to_string(p));
    return Field{p};
  }

  static Field of_characteristic(unsigned long p) { return p == 0 ? rationals() : prime(p); }

  unsigned long characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Rational normalize(const Rational& x) const {
    if (p_ == 0) return x;
    Integer modulus(p_);
    Integer num = x.get_num() % modulus;
    Integer den = x.get_den() % modulus;
    if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
    Integer den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    Integer r = (num * den_inv) % modulus;
    if (r < 0) r += modulus;
    return Rational(r);
  }

  Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
  Rational neg(const Rational& a) const { return normalize(-a); }

  Rational inv(const Rational& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (p_ == 0) return Rational(1) / a;
    return normalize(Rational(a.get_den(), a.get_num()));
  }

  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  /// Image of an integer in the field.
  Rational from_integer(const Integer& n) const { return normalize(Rational(n)); }

  std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_ = 0;
};

/// Parses "Q", "QQ", "F2", "F_3", "GF(5)". Throws std::invalid_argument on anything else.
inline Field parse_field(const std::string& text) {
  if (text == "Q" || text == "QQ") return Field::rationals();
  std::string digits;
  if (text.rfind("GF(", 0) == 0 && text.size() > 4 && text.back() == ')')
    digits = text.substr(3, text.size() - 4);
  else if (text.rfind("F_", 0) == 0)
    digits = text.substr(2);
  else if (text.rfind("F", 0) == 0)
    digits = text.substr(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("unsupported field \"" + text + "\"");
  unsigned long p = std::stoul(digits);
  if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0)
    throw std::invalid_argument("unsupported field \"" + text + "\": characteristic must be prime");
  return Field::prime(p);
}

}  // namespace logaq
