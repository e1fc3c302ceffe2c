#pragma once

// Sparse multivariate polynomials, terms kept sorted by degrevlex (largest
// first) with no zero coefficients.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hypersmooth/error.hpp"
#include "hypersmooth/field_concept.hpp"
#include "hypersmooth/monomial.hpp"

namespace hypersmooth {

template <ExactField Field>
class Polynomial {
 public:
  using Element = typename Field::Element;
  using Term = std::pair<Monomial, Element>;

  Polynomial(Field field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  /// Builds from unsorted terms; repeated monomials are summed.
  Polynomial(Field field, std::size_t nvars, std::vector<Term> terms) : field_(std::move(field)), nvars_(nvars) {
    for (const auto& t : terms)
      if (t.first.nvars() != nvars_) raise(ErrorKind::DescriptorMismatch, "monomial arity mismatch");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return degrevlex_less(b.first, a.first); });
    for (auto& t : terms) {
      if (!terms_.empty() && terms_.back().first == t.first) {
        terms_.back().second = field_.add(terms_.back().second, t.second);
        if (field_.is_zero(terms_.back().second)) terms_.pop_back();
      } else if (!field_.is_zero(t.second)) {
        terms_.push_back(std::move(t));
      }
    }
  }

  static Polynomial constant(const Field& field, std::size_t nvars, Element c) {
    Polynomial p(field, nvars);
    if (!field.is_zero(c)) p.terms_.emplace_back(Monomial(nvars), std::move(c));
    return p;
  }

  static Polynomial variable(const Field& field, std::size_t nvars, std::size_t i) {
    Polynomial p(field, nvars);
    p.terms_.emplace_back(Monomial::variable(nvars, i), field.one());
    return p;
  }

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Monomial& leading_monomial() const { return terms_.front().first; }
  const Element& leading_coefficient() const { return terms_.front().second; }

  Element coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return degrevlex_less(x, t.first); });
    if (it != terms_.end() && it->first == m) return it->second;
    return field_.zero();
  }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.first.degree() == terms_.front().first.degree(); });
  }

  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_) || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].first == b.terms_[i].first) || !a.field_.equal(a.terms_[i].second, b.terms_[i].second))
        return false;
    return true;
  }

  /// this + c * m * g in one merge pass.
  Polynomial add_scaled(const Polynomial& g, const Element& c, const Monomial& m) const {
    check_compatible(g);
    Polynomial out(field_, nvars_);
    if (field_.is_zero(c)) {
      out.terms_ = terms_;
      return out;
    }
    out.terms_.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    while (a != terms_.end() || b != g.terms_.end()) {
      if (b == g.terms_.end()) {
        out.terms_.push_back(*a++);
        continue;
      }
      Monomial mb = b->first * m;
      if (a == terms_.end() || degrevlex_less(a->first, mb)) {
        out.terms_.emplace_back(std::move(mb), field_.mul(c, b->second));
        ++b;
      } else if (a->first == mb) {
        Element s = field_.add(a->second, field_.mul(c, b->second));
        if (!field_.is_zero(s)) out.terms_.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      } else {
        out.terms_.push_back(*a++);
      }
    }
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return a.add_scaled(b, a.field_.one(), Monomial(a.nvars_));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a.add_scaled(b, a.field_.neg(a.field_.one()), Monomial(a.nvars_));
  }

  Polynomial scaled(const Element& c) const {
    Polynomial out(field_, nvars_);
    if (field_.is_zero(c)) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [m, x] : terms_) out.terms_.emplace_back(m, field_.mul(c, x));
    return out;
  }

  Polynomial times_monomial(const Element& c, const Monomial& m) const {
    Polynomial out(field_, nvars_);
    if (field_.is_zero(c)) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [t, x] : terms_) out.terms_.emplace_back(t * m, field_.mul(c, x));
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    std::vector<Term> all;
    all.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) all.emplace_back(ma * mb, a.field_.mul(ca, cb));
    return Polynomial(a.field_, a.nvars_, std::move(all));
  }

  /// Removes and returns the leading term.
  Term pop_leading() {
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }

  /// Appends a term smaller than every stored one (caller guarantees order).
  void push_trailing(Term t) { terms_.push_back(std::move(t)); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading_coefficient()));
  }

  template <class Fn>
  Polynomial map_coefficients(Fn&& fn) const {
    Polynomial out(field_, nvars_);
    for (const auto& [m, c] : terms_) {
      Element v = fn(c);
      if (!field_.is_zero(v)) out.terms_.emplace_back(m, std::move(v));
    }
    return out;
  }

  template <class Target, class Fn>
  Polynomial<Target> convert(const Target& target, Fn&& fn) const {
    std::vector<typename Polynomial<Target>::Term> t;
    t.reserve(terms_.size());
    for (const auto& [m, c] : terms_) t.emplace_back(m, fn(c));
    return Polynomial<Target>(target, nvars_, std::move(t));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      const bool unit = field_.equal(c, field_.one());
      std::string cs = field_.to_string(c);
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      if (m.degree() == 0) {
        out += cs;
      } else {
        if (!unit) out += cs + "*";
        out += m.to_string();
      }
    }
    return out;
  }

  void check_compatible(const Polynomial& g) const {
    if (!(field_ == g.field_)) raise(ErrorKind::DescriptorMismatch, "polynomials over different fields");
    if (nvars_ != g.nvars_) raise(ErrorKind::DescriptorMismatch, "polynomials in different variable counts");
  }

 private:
  Field field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

}  // namespace hypersmooth
