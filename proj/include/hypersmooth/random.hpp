#pragma once

// Seeded generators for random forms and systems. Only the raw 64-bit
// mt19937_64 stream is used (reduced with %), so output is identical across
// standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "hypersmooth/fields.hpp"
#include "hypersmooth/multipoly.hpp"

namespace hypersmooth {

using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

inline GaloisField::Element random_element(const GaloisField& k, Rng& rng) {
  return static_cast<GaloisField::Element>(uniform_below(rng, k.order()));
}

/// Every coefficient drawn uniformly (zero allowed); retried until nonzero.
inline HomogeneousForm<GaloisField> random_form(const GaloisField& k, std::size_t nvars, unsigned d, Rng& rng) {
  const auto basis = monomials_of_degree(nvars, d);
  while (true) {
    std::vector<typename Polynomial<GaloisField>::Term> t;
    for (const auto& m : basis) t.emplace_back(m, random_element(k, rng));
    HomogeneousForm<GaloisField> f(Polynomial<GaloisField>(k, nvars, std::move(t)), d);
    if (!f.is_zero()) return f;
  }
}

/// count independent random forms, redrawing the whole set on dependence.
inline LinearSystemOfForms<GaloisField> random_system(const GaloisField& k, std::size_t nvars, unsigned d,
                                                      std::size_t count, Rng& rng) {
  while (true) {
    std::vector<HomogeneousForm<GaloisField>> g;
    for (std::size_t i = 0; i < count; ++i) g.push_back(random_form(k, nvars, d, rng));
    if (coefficient_matrix(g, k, nvars, d).rank() == count) return LinearSystemOfForms<GaloisField>(k, nvars, d, std::move(g));
  }
}

}  // namespace hypersmooth
