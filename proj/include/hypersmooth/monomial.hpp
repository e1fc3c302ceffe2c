#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypersmooth/error.hpp"

namespace hypersmooth {

/// Exponent vector x_0^{a_0} ... x_n^{a_n}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  Monomial(std::initializer_list<unsigned> exps) : Monomial(std::vector<unsigned>(exps)) {}
  explicit Monomial(const std::vector<unsigned>& exps) : e_(exps.begin(), exps.end()) {
    for (auto x : exps) deg_ += x;
  }

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1) {
    Monomial m(nvars);
    m.e_[i] = static_cast<std::uint16_t>(power);
    m.deg_ = power;
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  unsigned degree() const { return deg_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  std::vector<unsigned> exponents() const { return {e_.begin(), e_.end()}; }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  /// Index of the variable when this is x_i^k with k >= 1.
  std::optional<std::size_t> pure_power_variable() const {
    std::optional<std::size_t> var;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (var) return std::nullopt;
      var = i;
    }
    return var;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] + b.e_[i]);
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += "x" + std::to_string(i);
      if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::vector<std::uint16_t> e_;
  unsigned deg_ = 0;
};

/// Degree reverse lexicographic order with x_0 > x_1 > ... > x_n: higher
/// degree wins; on ties, the monomial whose rightmost differing exponent is
/// smaller is the larger monomial.
inline bool degrevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.nvars(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

struct DegrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_less(b, a); }
};

/// All degree-d monomials in nvars variables, largest first.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (nvars == 0) return out;
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), DegrevlexGreater{});
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace hypersmooth
