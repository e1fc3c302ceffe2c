#pragma once

// Homogeneous forms and linear systems of forms.

#include <string>
#include <utility>
#include <vector>

#include "hypersmooth/error.hpp"
#include "hypersmooth/fields.hpp"
#include "hypersmooth/matrix.hpp"
#include "hypersmooth/polynomial.hpp"

namespace hypersmooth {

/// A homogeneous form of declared degree d in nvars = n+1 variables. The zero
/// form keeps its declared degree.
template <ExactField Field>
class HomogeneousForm {
 public:
  using Element = typename Field::Element;
  using Term = typename Polynomial<Field>::Term;

  HomogeneousForm(Field field, std::size_t nvars, unsigned degree)
      : poly_(std::move(field), nvars), degree_(degree) {}

  HomogeneousForm(Polynomial<Field> poly, unsigned degree) : poly_(std::move(poly)), degree_(degree) {
    for (const auto& t : poly_.terms())
      if (t.first.degree() != degree_) raise(ErrorKind::NotHomogeneous, "term " + t.first.to_string() + " has wrong degree");
  }

  /// Convenience constructor from (exponent vector, coefficient) pairs.
  HomogeneousForm(Field field, std::size_t nvars, unsigned degree,
                  const std::vector<std::pair<std::vector<unsigned>, Element>>& terms)
      : HomogeneousForm(build(field, nvars, terms), degree) {}

  const Field& field() const { return poly_.field(); }
  std::size_t nvars() const { return poly_.nvars(); }
  unsigned degree() const { return degree_; }
  const Polynomial<Field>& poly() const { return poly_; }
  const std::vector<Term>& terms() const { return poly_.terms(); }
  std::size_t term_count() const { return poly_.size(); }
  bool is_zero() const { return poly_.is_zero(); }
  Element coefficient(const Monomial& m) const { return poly_.coefficient(m); }

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

  friend HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b) {
    a.check_same_space(b);
    return {a.poly_ + b.poly_, a.degree_};
  }
  friend HomogeneousForm operator-(const HomogeneousForm& a, const HomogeneousForm& b) {
    a.check_same_space(b);
    return {a.poly_ - b.poly_, a.degree_};
  }
  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
    return {a.poly_ * b.poly_, a.degree_ + b.degree_};
  }
  HomogeneousForm scaled(const Element& c) const { return {poly_.scaled(c), degree_}; }

  HomogeneousForm pow(unsigned k) const {
    HomogeneousForm r(Polynomial<Field>::constant(field(), nvars(), field().one()), 0);
    HomogeneousForm b = *this;
    while (k > 0) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  /// Formal derivative; exponents are reduced into the field, so in
  /// characteristic p the terms with p | a_i drop out.
  HomogeneousForm partial_derivative(std::size_t i) const {
    if (i >= nvars()) raise(ErrorKind::PreconditionViolated, "variable index out of range");
    const Field& f = field();
    std::vector<Term> out;
    for (const auto& [m, c] : terms()) {
      if (m[i] == 0) continue;
      const Element k = f.from_int(m[i]);
      if (f.is_zero(k)) continue;
      out.emplace_back(m / Monomial::variable(nvars(), i), f.mul(k, c));
    }
    return {Polynomial<Field>(f, nvars(), std::move(out)), degree_ == 0 ? 0 : degree_ - 1};
  }

  Element evaluate(const std::vector<Element>& point) const {
    if (point.size() != nvars()) raise(ErrorKind::DescriptorMismatch, "point has wrong length");
    const Field& f = field();
    std::vector<std::vector<Element>> powers(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
      powers[i].push_back(f.one());
      for (unsigned k = 1; k <= degree_; ++k) powers[i].push_back(f.mul(powers[i].back(), point[i]));
    }
    Element v = f.zero();
    for (const auto& [m, c] : terms()) {
      Element t = c;
      for (std::size_t i = 0; i < nvars() && !f.is_zero(t); ++i)
        if (m[i]) t = f.mul(t, powers[i][m[i]]);
      v = f.add(v, t);
    }
    return v;
  }

  /// Replaces x_i by the linear form sum_j A(i, j) x_j.
  HomogeneousForm substitute_linear(const FieldMatrix<Field>& a) const {
    if (!(a.field() == field())) raise(ErrorKind::DescriptorMismatch, "matrix over a different field");
    if (a.rows() != nvars() || a.cols() != nvars()) raise(ErrorKind::PreconditionViolated, "matrix must be (n+1)x(n+1)");
    const Field& f = field();
    std::vector<std::vector<Polynomial<Field>>> powers(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
      std::vector<Term> lin;
      for (std::size_t j = 0; j < nvars(); ++j) lin.emplace_back(Monomial::variable(nvars(), j), a(i, j));
      const Polynomial<Field> li(f, nvars(), std::move(lin));
      powers[i].push_back(Polynomial<Field>::constant(f, nvars(), f.one()));
      for (unsigned k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * li);
    }
    Polynomial<Field> acc(f, nvars());
    for (const auto& [m, c] : terms()) {
      Polynomial<Field> t = Polynomial<Field>::constant(f, nvars(), c);
      for (std::size_t i = 0; i < nvars(); ++i)
        if (m[i]) t = t * powers[i][m[i]];
      acc = acc + t;
    }
    return {std::move(acc), degree_};
  }

  /// sum_i x_i * dF/dx_i, which equals (d mod p) * F.
  HomogeneousForm euler_combination() const {
    HomogeneousForm acc(field(), nvars(), degree_);
    for (std::size_t i = 0; i < nvars(); ++i) {
      const auto xi = HomogeneousForm(Polynomial<Field>::variable(field(), nvars(), i), 1);
      const auto di = partial_derivative(i);
      if (!di.is_zero()) acc = acc + xi * di;
    }
    return acc;
  }

  std::string to_string() const { return poly_.to_string(); }

  template <class Fn>
  HomogeneousForm map_coefficients(Fn&& fn) const {
    return {poly_.map_coefficients(std::forward<Fn>(fn)), degree_};
  }

  void check_same_space(const HomogeneousForm& b) const {
    poly_.check_compatible(b.poly_);
    if (degree_ != b.degree_) raise(ErrorKind::DegreeMismatch, "forms of different degree");
  }

 private:
  static Polynomial<Field> build(const Field& field, std::size_t nvars,
                                 const std::vector<std::pair<std::vector<unsigned>, Element>>& terms) {
    std::vector<Term> t;
    for (const auto& [e, c] : terms) {
      if (e.size() != nvars) raise(ErrorKind::DescriptorMismatch, "exponent vector has wrong length");
      t.emplace_back(Monomial(e), c);
    }
    return Polynomial<Field>(field, nvars, std::move(t));
  }

  Polynomial<Field> poly_;
  unsigned degree_;
};

template <ExactField Field>
HomogeneousForm<Field> linear_variable(const Field& field, std::size_t nvars, std::size_t i) {
  return {Polynomial<Field>::variable(field, nvars, i), 1};
}

template <ExactField Field>
HomogeneousForm<Field> linear_form(const Field& field, const std::vector<typename Field::Element>& coeffs) {
  std::vector<typename Polynomial<Field>::Term> t;
  for (std::size_t j = 0; j < coeffs.size(); ++j) t.emplace_back(Monomial::variable(coeffs.size(), j), coeffs[j]);
  return {Polynomial<Field>(field, coeffs.size(), std::move(t)), 1};
}

/// Embeds coefficients along an explicit field embedding.
inline HomogeneousForm<GaloisField> embed(const HomogeneousForm<GaloisField>& f, const Embedding& emb) {
  if (!(f.field() == emb.source())) raise(ErrorKind::DescriptorMismatch, "form is not over the embedding source");
  return {f.poly().convert(emb.target(), [&](GaloisField::Element c) { return emb(c); }), f.degree()};
}

/// Pulls coefficients back to the subfield; throws DescriptorMismatch when
/// some coefficient is not in the image.
inline HomogeneousForm<GaloisField> restrict_to(const HomogeneousForm<GaloisField>& f, const Embedding& emb) {
  if (!(f.field() == emb.target())) raise(ErrorKind::DescriptorMismatch, "form is not over the embedding target");
  return {f.poly().convert(emb.source(),
                           [&](GaloisField::Element c) {
                             auto s = emb.preimage(c);
                             if (!s) raise(ErrorKind::DescriptorMismatch, "coefficient outside the subfield");
                             return *s;
                           }),
          f.degree()};
}

/// Applies c -> c^{p^k} to every coefficient.
inline HomogeneousForm<GaloisField> frobenius_coefficients(const HomogeneousForm<GaloisField>& f, unsigned k) {
  const auto& field = f.field();
  return f.map_coefficients([&](GaloisField::Element c) { return field.frobenius(c, k); });
}

/// True iff every coefficient lies in F_{p^k}; k must divide e.
inline bool coefficients_fixed_by_frobenius(const HomogeneousForm<GaloisField>& f, unsigned k) {
  if (k == 0 || f.field().degree() % k != 0) raise(ErrorKind::PreconditionViolated, "subfield degree must divide e");
  for (const auto& [m, c] : f.terms())
    if (f.field().frobenius(c, k) != c) return false;
  return true;
}

/// Coefficient vectors of several degree-d forms against the full monomial
/// basis, one row per form.
template <ExactField Field>
FieldMatrix<Field> coefficient_matrix(const std::vector<HomogeneousForm<Field>>& forms, const Field& field,
                                      std::size_t nvars, unsigned degree) {
  const auto basis = monomials_of_degree(nvars, degree);
  FieldMatrix<Field> m(field, forms.size(), basis.size());
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) m(i, j) = forms[i].coefficient(basis[j]);
  return m;
}

/// <F_0, ..., F_r>: r+1 linearly independent forms sharing field, nvars and degree.
template <ExactField Field>
class LinearSystemOfForms {
 public:
  using Element = typename Field::Element;
  using Form = HomogeneousForm<Field>;

  LinearSystemOfForms(Field field, std::size_t nvars, unsigned degree, std::vector<Form> generators)
      : field_(std::move(field)), nvars_(nvars), degree_(degree), gens_(std::move(generators)) {
    if (gens_.empty()) raise(ErrorKind::PreconditionViolated, "a linear system needs at least one generator");
    for (const auto& g : gens_) {
      if (!(g.field() == field_)) raise(ErrorKind::DescriptorMismatch, "generator over a different field");
      if (g.nvars() != nvars_) raise(ErrorKind::DescriptorMismatch, "generator in a different number of variables");
      if (g.degree() != degree_) raise(ErrorKind::DegreeMismatch, "generator of different degree");
    }
    if (coefficient_matrix(gens_, field_, nvars_, degree_).rank() != gens_.size())
      raise(ErrorKind::DependentGenerators, "generators are linearly dependent");
  }

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  /// Projective dimension r.
  std::size_t dimension() const { return gens_.size() - 1; }
  const std::vector<Form>& generators() const { return gens_; }

  Form member(const std::vector<Element>& a) const {
    if (a.size() != gens_.size()) raise(ErrorKind::PreconditionViolated, "member needs r+1 coefficients");
    Polynomial<Field> acc(field_, nvars_);
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (!field_.is_zero(a[i])) acc = acc + gens_[i].poly().scaled(a[i]);
    return {std::move(acc), degree_};
  }

  friend bool operator==(const LinearSystemOfForms& a, const LinearSystemOfForms& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.gens_ == b.gens_;
  }

 private:
  Field field_;
  std::size_t nvars_;
  unsigned degree_;
  std::vector<Form> gens_;
};

}  // namespace hypersmooth
