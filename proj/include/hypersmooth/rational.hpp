#pragma once

// The field Q with GMP rationals. Values are kept canonical (reduced, positive
// denominator) after every operation.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hypersmooth/error.hpp"

namespace hypersmooth {

using Rational = mpq_class;

class RationalField {
 public:
  using Element = Rational;

  std::uint64_t characteristic() const { return 0; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element from_int(long long v) const { return Element(static_cast<long>(v)); }

  Element add(const Element& a, const Element& b) const { return Element(a + b); }
  Element sub(const Element& a, const Element& b) const { return Element(a - b); }
  Element neg(const Element& a) const { return Element(-a); }
  Element mul(const Element& a, const Element& b) const { return Element(a * b); }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) raise(ErrorKind::DivisionByZero, "inverse of zero");
    return Element(1 / a);
  }
  Element div(const Element& a, const Element& b) const {
    if (sgn(b) == 0) raise(ErrorKind::DivisionByZero, "division by zero");
    return Element(a / b);
  }
  Element pow(Element a, std::uint64_t n) const {
    Element r(1);
    while (n > 0) {
      if (n & 1) r *= a;
      a *= a;
      n >>= 1;
    }
    return r;
  }

  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }

  /// Scales a coefficient list to coprime integers with a positive leading
  /// entry (integer content 1).
  static void make_primitive(std::vector<Element>& coeffs) {
    if (coeffs.empty()) return;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& c : coeffs) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    if (num_gcd == 0) return;
    // content of c * den_lcm equals num_gcd * den_lcm / den_lcm when reduced
    Element scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(coeffs.front()) < 0) scale = -scale;
    for (auto& c : coeffs) c *= scale;
  }
};

/// Parses "a", "-a" or "a/b".
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) raise(ErrorKind::ParseError, "bad rational '" + text + "'");
  if (r.get_den() == 0) raise(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace hypersmooth
