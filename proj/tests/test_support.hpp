#pragma once

// Independent oracles used by the tests. Nothing here calls the library's
// elimination, table arithmetic or Groebner code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hypersmooth/fields.hpp"
#include "hypersmooth/matrix.hpp"
#include "hypersmooth/multipoly.hpp"

namespace oracle {

using Coeffs = std::vector<std::uint64_t>;

// schoolbook product of two coefficient vectors modulo a monic modulus
inline Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& modulus, std::uint64_t p) {
  const std::size_t e = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = prod.size(); k-- > e;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= e; ++i) prod[k - e + i] = (prod[k - e + i] + (p - c) * modulus[i]) % p;
  }
  prod.resize(e);
  return prod;
}

// f divisible by the monic g over F_p (long division)
inline bool divides(const Coeffs& g, Coeffs f, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t c = f.back();
    const std::size_t s = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[s + i] = (f[s + i] + (p - c) * g[i]) % p;
    f.pop_back();
  }
  return std::all_of(f.begin(), f.end(), [](std::uint64_t c) { return c == 0; });
}

// Irreducible iff no monic factor of degree 1..k/2 divides it (exhaustive).
inline bool irreducible_by_trial_division(const Coeffs& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t dg = 1; dg <= k / 2; ++dg) {
    Coeffs g(dg + 1, 0);
    g[dg] = 1;
    while (true) {
      if (divides(g, f, p)) return false;
      std::size_t i = 0;
      while (i < dg && ++g[i] == p) g[i++] = 0;
      if (i == dg) break;
    }
  }
  return true;
}

// smallest base-p encoded monic irreducible of degree k, by trial division
inline Coeffs first_irreducible(std::uint64_t p, std::size_t k) {
  Coeffs f(k + 1, 0);
  f[k] = 1;
  while (!irreducible_by_trial_division(f, p)) {
    std::size_t i = 0;
    while (i < k && ++f[i] == p) f[i++] = 0;
  }
  return f;
}

// Leibniz expansion over all permutations.
template <class Field>
typename Field::Element leibniz_det(const hypersmooth::FieldMatrix<Field>& m) {
  const Field& k = m.field();
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto total = k.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    auto t = k.one();
    for (std::size_t i = 0; i < n; ++i) t = k.mul(t, m(i, perm[i]));
    total = inversions % 2 ? k.sub(total, t) : k.add(total, t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Value and all partials at a point, each evaluated from the raw term list
// with derivative coefficients computed by repeated addition.
inline bool singular_at(const hypersmooth::HomogeneousForm<hypersmooth::GaloisField>& f,
                        const std::vector<hypersmooth::GaloisField::Element>& pt) {
  const auto& k = f.field();
  auto monomial_value = [&](const hypersmooth::Monomial& m, std::size_t skip) {
    hypersmooth::GaloisField::Element v = 1;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      const unsigned e = m[i] - (i == skip ? 1 : 0);
      for (unsigned t = 0; t < e; ++t) v = k.mul(v, pt[i]);
    }
    return v;
  };
  hypersmooth::GaloisField::Element value = 0;
  for (const auto& [m, c] : f.terms()) value = k.add(value, k.mul(c, monomial_value(m, f.nvars())));
  if (value != 0) return false;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    hypersmooth::GaloisField::Element d = 0;
    for (const auto& [m, c] : f.terms()) {
      if (m[i] == 0) continue;
      hypersmooth::GaloisField::Element term = 0;
      for (unsigned rep = 0; rep < m[i]; ++rep) term = k.add(term, c);
      d = k.add(d, k.mul(term, monomial_value(m, i)));
    }
    if (d != 0) return false;
  }
  return true;
}

}  // namespace oracle
