#pragma once

// Buchberger's algorithm in degrevlex (x_0 > ... > x_n) and the projective
// emptiness test for homogeneous ideals.

#include <algorithm>
#include <cstddef>
#include <set>
#include <tuple>
#include <vector>

#include "hypersmooth/error.hpp"
#include "hypersmooth/polynomial.hpp"

namespace hypersmooth {

struct GroebnerOptions {
  /// Maximum number of S-pair reductions before BudgetExceeded.
  std::size_t step_budget = 1'000'000;
};

template <ExactField Field>
class GroebnerBasis {
 public:
  GroebnerBasis(Field field, std::size_t nvars, std::vector<Polynomial<Field>> elements)
      : field_(std::move(field)), nvars_(nvars), elements_(std::move(elements)) {}

  static constexpr const char* order() { return "degrevlex"; }
  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial<Field>>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  Field field_;
  std::size_t nvars_;
  std::vector<Polynomial<Field>> elements_;
};

namespace detail {

template <ExactField Field>
void normalize(Polynomial<Field>& p) {
  if (p.is_zero()) return;
  if constexpr (requires(std::vector<typename Field::Element>& v) { Field::make_primitive(v); }) {
    std::vector<typename Field::Element> c;
    c.reserve(p.size());
    for (const auto& t : p.terms()) c.push_back(t.second);
    Field::make_primitive(c);
    const auto s = p.field().div(c.front(), p.leading_coefficient());
    p = p.scaled(s);
  } else {
    p = p.monic();
  }
}

}  // namespace detail

/// Full remainder of f modulo the list G: no monomial of the result is
/// divisible by a leading monomial of G.
template <ExactField Field>
Polynomial<Field> normal_form(Polynomial<Field> f, const std::vector<Polynomial<Field>>& g) {
  const Field& field = f.field();
  Polynomial<Field> rem(field, f.nvars());
  while (!f.is_zero()) {
    const Polynomial<Field>* reducer = nullptr;
    for (const auto& h : g)
      if (!h.is_zero() && h.leading_monomial().divides(f.leading_monomial())) {
        reducer = &h;
        break;
      }
    if (reducer) {
      const auto c = field.neg(field.div(f.leading_coefficient(), reducer->leading_coefficient()));
      f = f.add_scaled(*reducer, c, f.leading_monomial() / reducer->leading_monomial());
    } else {
      rem.push_trailing(f.pop_leading());
    }
  }
  return rem;
}

template <ExactField Field>
Polynomial<Field> normal_form(const Polynomial<Field>& f, const GroebnerBasis<Field>& g) {
  return normal_form(f, g.elements());
}

template <ExactField Field>
Polynomial<Field> s_polynomial(const Polynomial<Field>& a, const Polynomial<Field>& b) {
  const Field& field = a.field();
  const Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
  const auto ta = a.times_monomial(field.inv(a.leading_coefficient()), l / a.leading_monomial());
  return ta.add_scaled(b, field.neg(field.inv(b.leading_coefficient())), l / b.leading_monomial());
}

/// Reduced Groebner basis. Pairs are taken by smallest lcm degree, ties by
/// index; the product and chain criteria discard pairs.
template <ExactField Field>
GroebnerBasis<Field> buchberger(const std::vector<Polynomial<Field>>& generators, const GroebnerOptions& opts = {}) {
  if (generators.empty()) raise(ErrorKind::PreconditionViolated, "no generators");
  const Field field = generators.front().field();
  const std::size_t nvars = generators.front().nvars();

  std::vector<Polynomial<Field>> g;
  for (const auto& f : generators) {
    f.check_compatible(generators.front());
    if (f.is_zero()) continue;
    Polynomial<Field> h = f;
    detail::normalize(h);
    g.push_back(std::move(h));
  }
  if (g.empty()) raise(ErrorKind::PreconditionViolated, "all generators are zero");

  std::set<std::tuple<unsigned, std::size_t, std::size_t>> queue;
  std::vector<std::vector<char>> pending;
  auto add_element = [&](Polynomial<Field> h) {
    const std::size_t k = g.size();
    g.push_back(std::move(h));
    for (auto& row : pending) row.push_back(0);
    pending.emplace_back(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      queue.emplace(lcm(g[i].leading_monomial(), g[k].leading_monomial()).degree(), i, k);
      pending[i][k] = pending[k][i] = 1;
    }
  };
  {
    auto initial = std::move(g);
    g.clear();
    for (auto& h : initial) add_element(std::move(h));
  }

  std::size_t steps = 0;
  while (!queue.empty()) {
    const auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending[i][j] = pending[j][i] = 0;
    const Monomial& li = g[i].leading_monomial();
    const Monomial& lj = g[j].leading_monomial();
    if (coprime(li, lj)) continue;
    const Monomial l = lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k)
      chain = k != i && k != j && !pending[i][k] && !pending[j][k] && g[k].leading_monomial().divides(l);
    if (chain) continue;
    if (++steps > opts.step_budget) raise(ErrorKind::BudgetExceeded, "Groebner step budget exhausted");
    auto r = normal_form(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    detail::normalize(r);
    add_element(std::move(r));
  }

  // minimal basis: drop elements whose leading monomial is a multiple of another's
  std::vector<Polynomial<Field>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i || !g[k].leading_monomial().divides(g[i].leading_monomial())) continue;
      redundant = !(g[k].leading_monomial() == g[i].leading_monomial()) || k < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial<Field>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<Field>> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    auto lead = minimal[i];
    auto head = lead.pop_leading();
    auto tail = normal_form(std::move(lead), others);
    Polynomial<Field> h(field, nvars);
    h.push_trailing(std::move(head));
    h = (h + tail).monic();
    reduced.push_back(std::move(h));
  }
  std::sort(reduced.begin(), reduced.end(), [](const auto& a, const auto& b) {
    return degrevlex_less(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis<Field>(field, nvars, std::move(reduced));
}

/// For a homogeneous ideal: the zero set in P^n is empty iff every variable
/// has a pure power among the leading monomials (or the ideal is the unit ideal).
template <ExactField Field>
bool is_projectively_empty(const GroebnerBasis<Field>& basis) {
  std::vector<bool> covered(basis.nvars(), false);
  for (const auto& g : basis.elements()) {
    if (!g.is_homogeneous()) raise(ErrorKind::NotHomogeneous, "basis element " + g.to_string() + " is not homogeneous");
    if (g.leading_monomial().degree() == 0) return true;
    if (auto v = g.leading_monomial().pure_power_variable()) covered[*v] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

}  // namespace hypersmooth
