#pragma once

// Finite fields F_{p^e} realised as F_p[u]/(m(u)) for a monic irreducible m.
//
// An element is stored as its coefficient vector (c_0, ..., c_{e-1}) in the
// basis 1, u, ..., u^{e-1}, packed as the base-p integer c_0 + c_1 p + ...
// That packing is also the canonical enumeration order of the field, so the
// k-th element in enumerate order is simply the integer k.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "hypersmooth/error.hpp"

namespace hypersmooth {

namespace detail {

using PolyFp = std::vector<std::uint64_t>;  // low degree first

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (r != 1) raise(ErrorKind::DivisionByZero, "element not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

inline void trim(PolyFp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// remainder of a modulo the nonzero polynomial m over F_p
inline PolyFp poly_rem(PolyFp a, const PolyFp& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

inline PolyFp poly_mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyFp prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_rem(std::move(prod), m, p);
}

inline PolyFp poly_gcd(PolyFp a, PolyFp b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyFp r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline PolyFp poly_powmod(PolyFp base, std::uint64_t exp, const PolyFp& m, std::uint64_t p) {
  PolyFp result{1};
  base = poly_rem(std::move(base), m, p);
  while (exp > 0) {
    if (exp & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

/// Irreducibility of a degree-k polynomial over F_p (coefficients low first).
/// Degree <= 3: absence of roots. Otherwise the gcd test against x^{p^j} - x.
inline bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> coeffs) {
  detail::PolyFp f(coeffs.begin(), coeffs.end());
  for (auto& c : f) c %= p;
  detail::trim(f);
  if (f.size() < 2) return false;
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  if (k <= 3) {
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  detail::PolyFp xp{0, 1};
  for (std::size_t j = 1; j <= k / 2; ++j) {
    xp = detail::poly_powmod(xp, p, f, p);
    detail::PolyFp diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    detail::trim(diff);
    if (diff.empty()) return false;
    if (detail::poly_gcd(diff, f, p).size() > 1) return false;
  }
  return true;
}

/// Canonical monic irreducible of degree k over F_p: the candidate whose
/// coefficient vector (constant term least significant) is the smallest
/// base-p integer. Returns nullopt for the prime field (k = 1).
inline std::optional<std::vector<std::uint64_t>> find_irreducible(std::uint64_t p, unsigned k) {
  if (!detail::is_prime(p)) raise(ErrorKind::InvalidDescriptor, "characteristic must be prime");
  if (k == 0) raise(ErrorKind::InvalidDescriptor, "degree must be positive");
  if (k == 1) return std::nullopt;
  std::vector<std::uint64_t> cand(k + 1, 0);
  cand[k] = 1;
  while (true) {
    if (is_irreducible(p, cand)) return cand;
    std::size_t i = 0;
    while (i < k && ++cand[i] == p) cand[i++] = 0;
    if (i == k) raise(ErrorKind::InvalidDescriptor, "no irreducible found");  // unreachable
  }
}

class GaloisField;

/// Immutable F_{p^e}. Cheap to copy: a handle onto shared tables.
class GaloisField {
 public:
  using Element = std::uint32_t;

  /// Fields up to this order get log/exp tables; larger ones multiply
  /// polynomially.
  static constexpr std::uint64_t kTableLimit = 1u << 20;
  static constexpr std::uint64_t kMaxOrder = 1u << 30;

  GaloisField(std::uint64_t p, unsigned e, std::optional<std::vector<std::uint64_t>> modulus) {
    if (!detail::is_prime(p)) raise(ErrorKind::InvalidDescriptor, "p = " + std::to_string(p) + " is not prime");
    if (e == 0) raise(ErrorKind::InvalidDescriptor, "extension degree must be >= 1");
    auto d = std::make_shared<Data>();
    d->p = p;
    d->e = e;
    d->q = 1;
    for (unsigned i = 0; i < e; ++i) {
      d->pw.push_back(d->q);
      d->q *= p;
      if (d->q > kMaxOrder) raise(ErrorKind::FieldTooLarge, "field order exceeds supported bound");
    }
    if (e == 1) {
      if (modulus && !modulus->empty()) raise(ErrorKind::InvalidDescriptor, "prime field takes no modulus");
    } else {
      if (!modulus) raise(ErrorKind::InvalidDescriptor, "extension field needs a modulus");
      if (modulus->size() != e + 1) raise(ErrorKind::InvalidDescriptor, "modulus must have e+1 coefficients");
      for (auto c : *modulus)
        if (c >= p) raise(ErrorKind::InvalidDescriptor, "modulus coefficients must lie in [0,p)");
      if ((*modulus)[e] != 1) raise(ErrorKind::InvalidDescriptor, "modulus must be monic");
      if (!is_irreducible(p, *modulus)) raise(ErrorKind::InvalidDescriptor, "modulus is reducible");
      d->modulus = *modulus;
    }
    build_tables(*d);
    d_ = std::move(d);
  }

  static GaloisField prime(std::uint64_t p) { return GaloisField(p, 1, std::nullopt); }
  static GaloisField canonical(std::uint64_t p, unsigned e) { return GaloisField(p, e, find_irreducible(p, e)); }

  std::uint64_t characteristic() const { return d_->p; }
  unsigned degree() const { return d_->e; }
  std::uint64_t order() const { return d_->q; }
  /// Monic modulus, low degree first; empty for a prime field.
  const std::vector<std::uint64_t>& modulus() const { return d_->modulus; }
  bool is_prime_field() const { return d_->e == 1; }

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->e == b.d_->e && a.d_->modulus == b.d_->modulus);
  }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  Element from_int(long long v) const {
    const auto p = static_cast<long long>(d_->p);
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<Element>(r);
  }

  Element from_coeffs(std::span<const std::uint64_t> c) const {
    if (c.size() > d_->e) raise(ErrorKind::DescriptorMismatch, "coefficient vector longer than e");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= d_->p) raise(ErrorKind::DescriptorMismatch, "coefficient outside [0,p)");
      v += c[i] * d_->pw[i];
    }
    return static_cast<Element>(v);
  }

  std::vector<std::uint64_t> coeffs(Element a) const {
    std::vector<std::uint64_t> c(d_->e);
    std::uint64_t v = a;
    for (unsigned i = 0; i < d_->e; ++i) {
      c[i] = v % d_->p;
      v /= d_->p;
    }
    return c;
  }

  Element add(Element a, Element b) const {
    if (d_->e == 1) return static_cast<Element>((std::uint64_t{a} + b) % d_->p);
    if (d_->p == 2) return a ^ b;
    std::uint64_t x = a, y = b, r = 0;
    for (unsigned i = 0; i < d_->e; ++i) {
      r += ((x % d_->p + y % d_->p) % d_->p) * d_->pw[i];
      x /= d_->p;
      y /= d_->p;
    }
    return static_cast<Element>(r);
  }

  Element neg(Element a) const {
    if (d_->p == 2) return a;
    if (d_->e == 1) return a == 0 ? 0 : static_cast<Element>(d_->p - a);
    std::uint64_t x = a, r = 0;
    for (unsigned i = 0; i < d_->e; ++i) {
      r += ((d_->p - x % d_->p) % d_->p) * d_->pw[i];
      x /= d_->p;
    }
    return static_cast<Element>(r);
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    if (d_->e == 1) return static_cast<Element>(std::uint64_t{a} * b % d_->p);
    if (!d_->exp.empty()) {
      const std::uint64_t s = std::uint64_t{d_->log[a]} + d_->log[b];
      return d_->exp[s % (d_->q - 1)];
    }
    return slow_mul(*d_, a, b);
  }

  Element inv(Element a) const {
    if (a == 0) raise(ErrorKind::DivisionByZero, "inverse of zero");
    if (d_->e == 1) return static_cast<Element>(detail::inv_mod(a, d_->p));
    if (!d_->exp.empty()) return d_->exp[(d_->q - 1 - d_->log[a]) % (d_->q - 1)];
    return pow(a, d_->q - 2);
  }

  Element div(Element a, Element b) const {
    if (b == 0) raise(ErrorKind::DivisionByZero, "division by zero");
    return mul(a, inv(b));
  }

  Element pow(Element a, std::uint64_t n) const {
    if (n == 0) return 1;
    if (a == 0) return 0;
    if (!d_->exp.empty()) {
      const std::uint64_t m = d_->q - 1;
      const unsigned __int128 s = static_cast<unsigned __int128>(d_->log[a]) * (n % m);
      return d_->exp[static_cast<std::uint64_t>(s % m)];
    }
    n %= (d_->q - 1);
    if (n == 0) n = d_->q - 1;
    Element r = 1;
    while (n > 0) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }

  /// x^{p^k}; k is taken mod e since the e-fold composite is the identity.
  Element frobenius(Element x, unsigned k = 1) const {
    k %= d_->e;
    for (unsigned i = 0; i < k; ++i) x = pow(x, d_->p);
    return x;
  }

  /// Square root in characteristic 2: x^{2^{e-1}}.
  Element sqrt_char2(Element x) const {
    if (d_->p != 2) raise(ErrorKind::WrongCharacteristic, "square root helper needs characteristic 2");
    return frobenius(x, d_->e - 1);
  }

  /// Human-readable polynomial in u, highest power first ("u + 1", "2u^2 + 1").
  std::string to_string(Element a) const {
    if (a == 0) return "0";
    const auto c = coeffs(a);
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += " + ";
      if (i == 0) {
        out += std::to_string(c[i]);
      } else {
        if (c[i] != 1) out += std::to_string(c[i]);
        out += "u";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  std::string name() const {
    if (d_->e == 1) return "F_" + std::to_string(d_->p);
    return "F_" + std::to_string(d_->q);
  }

 private:
  struct Data {
    std::uint64_t p = 2;
    unsigned e = 1;
    std::uint64_t q = 2;
    std::vector<std::uint64_t> modulus;
    std::vector<std::uint64_t> pw;
    std::vector<Element> exp;
    std::vector<Element> log;
  };

  static Element slow_mul(const Data& d, Element a, Element b) {
    auto split = [&](Element v) {
      detail::PolyFp c(d.e);
      std::uint64_t x = v;
      for (auto& ci : c) {
        ci = x % d.p;
        x /= d.p;
      }
      detail::trim(c);
      return c;
    };
    const auto r = detail::poly_mulmod(split(a), split(b), d.modulus, d.p);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < r.size(); ++i) v += r[i] * d.pw[i];
    return static_cast<Element>(v);
  }

  static void build_tables(Data& d) {
    if (d.e == 1 || d.q > kTableLimit) return;
    const std::uint64_t m = d.q - 1;
    const auto factors = detail::prime_factors(m);
    auto slow_pow = [&](Element a, std::uint64_t n) {
      Element r = 1;
      while (n > 0) {
        if (n & 1) r = slow_mul(d, r, a);
        a = slow_mul(d, a, a);
        n >>= 1;
      }
      return r;
    };
    Element g = 0;
    for (std::uint64_t c = 2; c < d.q && g == 0; ++c) {
      const auto cand = static_cast<Element>(c);
      if (std::all_of(factors.begin(), factors.end(), [&](std::uint64_t f) { return slow_pow(cand, m / f) != 1; }))
        g = cand;
    }
    d.exp.resize(m);
    d.log.assign(d.q, 0);
    Element x = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
      d.exp[i] = x;
      d.log[x] = static_cast<Element>(i);
      x = slow_mul(d, x, g);
    }
  }

  std::shared_ptr<const Data> d_;
};

/// Explicit ring embedding F_{p^e} -> F_{p^{ek}}: the small generator u maps to
/// the smallest (in enumerate order) root of the small modulus in the big field.
class Embedding {
 public:
  using Element = GaloisField::Element;

  Embedding(GaloisField small, GaloisField big) : small_(std::move(small)), big_(std::move(big)) {
    if (small_.characteristic() != big_.characteristic() || big_.degree() % small_.degree() != 0)
      raise(ErrorKind::DescriptorMismatch, small_.name() + " is not a subfield of " + big_.name());
    Element gamma = 0;
    if (small_.degree() > 1) {
      const auto& m = small_.modulus();
      auto eval = [&](Element x) {
        Element v = 0;
        for (std::size_t i = m.size(); i-- > 0;) v = big_.add(big_.mul(v, x), big_.from_int(static_cast<long long>(m[i])));
        return v;
      };
      // roots live in the order-(q-1) subgroup {h^j}; take the smallest encoding
      const std::uint64_t big_q = big_.order(), q = small_.order();
      Element gen = 0;
      const auto factors = detail::prime_factors(big_q - 1);
      for (std::uint64_t c = 2; c < big_q && gen == 0; ++c) {
        const auto cand = static_cast<Element>(c);
        if (std::all_of(factors.begin(), factors.end(),
                        [&](std::uint64_t f) { return big_.pow(cand, (big_q - 1) / f) != 1; }))
          gen = cand;
      }
      const Element h = big_.pow(gen, (big_q - 1) / (q - 1));
      bool found = false;
      Element x = 1;
      for (std::uint64_t j = 0; j < q - 1; ++j, x = big_.mul(x, h)) {
        if (eval(x) == 0 && (!found || x < gamma)) {
          gamma = x;
          found = true;
        }
      }
      if (!found) raise(ErrorKind::DescriptorMismatch, "no root of the subfield modulus");
    }
    std::vector<Element> powers(small_.degree());
    Element g = 1;
    for (auto& pw : powers) {
      pw = g;
      g = big_.mul(g, gamma);
    }
    image_.resize(small_.order());
    for (std::uint64_t s = 0; s < small_.order(); ++s) {
      const auto c = small_.coeffs(static_cast<Element>(s));
      Element v = 0;
      for (std::size_t i = 0; i < c.size(); ++i)
        v = big_.add(v, big_.mul(big_.from_int(static_cast<long long>(c[i])), powers[i]));
      image_[s] = v;
      preimage_.emplace(v, static_cast<Element>(s));
    }
  }

  const GaloisField& source() const { return small_; }
  const GaloisField& target() const { return big_; }

  Element operator()(Element a) const { return image_.at(a); }

  /// Inverse on the image; nullopt when b lies outside the subfield.
  std::optional<Element> preimage(Element b) const {
    auto it = preimage_.find(b);
    if (it == preimage_.end()) return std::nullopt;
    return it->second;
  }

 private:
  GaloisField small_;
  GaloisField big_;
  std::vector<Element> image_;
  std::unordered_map<Element, Element> preimage_;
};

/// F_{q^k} over F_q with its canonical modulus over F_p, plus the embedding.
inline Embedding extension_of(const GaloisField& base, unsigned k) {
  return Embedding(base, GaloisField::canonical(base.characteristic(), base.degree() * k));
}

/// All q elements in canonical order (the encoding itself).
inline std::vector<GaloisField::Element> enumerate_field(const GaloisField& f) {
  std::vector<GaloisField::Element> out(f.order());
  for (std::uint64_t i = 0; i < f.order(); ++i) out[i] = static_cast<GaloisField::Element>(i);
  return out;
}

/// Visits P^r(F_q) with every tuple scaled so its first nonzero coordinate
/// is 1. Order: by position of the leading 1 from the right ([0:..:1] first),
/// then the trailing coordinates in odometer order (last coordinate fastest).
/// The visitor returns false to stop early.
template <class Visitor>
bool for_each_projective_point(std::uint64_t q, std::size_t r, Visitor&& visit) {
  std::vector<GaloisField::Element> pt(r + 1, 0);
  for (std::size_t lead = r + 1; lead-- > 0;) {
    std::fill(pt.begin(), pt.end(), 0);
    pt[lead] = 1;
    while (true) {
      if (!visit(static_cast<const std::vector<GaloisField::Element>&>(pt))) return false;
      std::size_t i = r;
      while (i > lead && ++pt[i] == q) pt[i--] = 0;
      if (i == lead) break;
    }
  }
  return true;
}

/// (q^{r+1} - 1) / (q - 1)
inline std::uint64_t projective_point_count(std::uint64_t q, std::size_t r) {
  std::uint64_t n = 0, pw = 1;
  for (std::size_t i = 0; i <= r; ++i, pw *= q) n += pw;
  return n;
}

inline std::vector<std::vector<GaloisField::Element>> enumerate_projective_points(const GaloisField& f, std::size_t r) {
  std::vector<std::vector<GaloisField::Element>> out;
  out.reserve(projective_point_count(f.order(), r));
  for_each_projective_point(f.order(), r, [&](const auto& pt) {
    out.push_back(pt);
    return true;
  });
  return out;
}

/// Value-semantic field element bound to its field; mixing fields throws.
class FieldElement {
 public:
  using Element = GaloisField::Element;

  FieldElement(GaloisField f, Element v) : f_(std::move(f)), v_(v) {
    if (v_ >= f_.order()) raise(ErrorKind::DescriptorMismatch, "element encoding outside the field");
  }
  FieldElement(GaloisField f, std::initializer_list<std::uint64_t> coeffs)
      : f_(std::move(f)), v_(f_.from_coeffs(std::vector<std::uint64_t>(coeffs))) {}

  const GaloisField& field() const { return f_; }
  Element value() const { return v_; }
  std::vector<std::uint64_t> coeffs() const { return f_.coeffs(v_); }
  bool is_zero() const { return v_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return {a.checked(b), a.f_.add(a.v_, b.v_)}; }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return {a.checked(b), a.f_.sub(a.v_, b.v_)}; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return {a.checked(b), a.f_.mul(a.v_, b.v_)}; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return {a.checked(b), a.f_.div(a.v_, b.v_)}; }
  FieldElement operator-() const { return {f_, f_.neg(v_)}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.f_ == b.f_ && a.v_ == b.v_; }

  FieldElement inv() const { return {f_, f_.inv(v_)}; }
  FieldElement pow(std::uint64_t n) const { return {f_, f_.pow(v_, n)}; }
  FieldElement frobenius(unsigned power = 1) const { return {f_, f_.frobenius(v_, power)}; }
  FieldElement sqrt_char2() const { return {f_, f_.sqrt_char2(v_)}; }

  std::string to_string() const { return f_.to_string(v_); }

 private:
  const GaloisField& checked(const FieldElement& b) const {
    if (!(f_ == b.f_)) raise(ErrorKind::DescriptorMismatch, f_.name() + " vs " + b.f_.name());
    return f_;
  }

  GaloisField f_;
  Element v_;
};

}  // namespace hypersmooth
