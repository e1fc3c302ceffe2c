#pragma once

// Explicit families: diagonal and cyclic forms, normal-basis coordinate
// changes, Frobenius-stable systems and their descent to the base field, the
// lift to Q, and the characteristic-2 quadric machinery.

#include <numeric>
#include <string>
#include <vector>

#include "hypersmooth/error.hpp"
#include "hypersmooth/fields.hpp"
#include "hypersmooth/matrix.hpp"
#include "hypersmooth/multipoly.hpp"
#include "hypersmooth/rational.hpp"
#include "hypersmooth/smoothness.hpp"

namespace hypersmooth {

/// c_0 x_0^d + ... + c_n x_n^d
template <ExactField Field>
HomogeneousForm<Field> fermat_form(const Field& k, const std::vector<typename Field::Element>& c, unsigned d) {
  const std::size_t nv = c.size();
  std::vector<typename Polynomial<Field>::Term> t;
  for (std::size_t i = 0; i < nv; ++i) {
    if (k.is_zero(c[i])) raise(ErrorKind::ZeroCoefficient, "coefficient c_" + std::to_string(i) + " is zero");
    t.emplace_back(Monomial::variable(nv, i, d), c[i]);
  }
  return {Polynomial<Field>(k, nv, std::move(t)), d};
}

/// c_0 x_0^{d-1} x_1 + c_1 x_1^{d-1} x_2 + ... + c_n x_n^{d-1} x_0
template <ExactField Field>
HomogeneousForm<Field> klein_form(const Field& k, const std::vector<typename Field::Element>& c, unsigned d) {
  if (d < 2) raise(ErrorKind::PreconditionViolated, "cyclic form needs degree >= 2");
  const std::size_t nv = c.size();
  std::vector<typename Polynomial<Field>::Term> t;
  for (std::size_t i = 0; i < nv; ++i) {
    if (k.is_zero(c[i])) raise(ErrorKind::ZeroCoefficient, "coefficient c_" + std::to_string(i) + " is zero");
    t.emplace_back(Monomial::variable(nv, i, d - 1) * Monomial::variable(nv, (i + 1) % nv), c[i]);
  }
  return {Polynomial<Field>(k, nv, std::move(t)), d};
}

/// A normal element alpha of F_{q^{n+1}} over F_q and its Moore matrix
/// A(j, i) = alpha^{q^{i+j}}. Row j is the coordinate y_j = sum_i A(j, i) x_i.
struct MooreData {
  GaloisField base;
  Embedding embedding;  // F_q -> F_{q^{n+1}}
  GaloisField::Element alpha;
  std::vector<GaloisField::Element> orbit;  // alpha^{q^k}, k = 0..n
  FieldMatrix<GaloisField> matrix;
  GaloisField::Element determinant;

  const GaloisField& big() const { return embedding.target(); }
  std::size_t size() const { return orbit.size(); }
};

namespace detail {

inline std::vector<GaloisField::Element> q_orbit(const GaloisField& big, unsigned base_degree, GaloisField::Element a,
                                                 std::size_t len) {
  std::vector<GaloisField::Element> o{a};
  while (o.size() < len) o.push_back(big.frobenius(o.back(), base_degree));
  return o;
}

inline FieldMatrix<GaloisField> moore_matrix(const GaloisField& big, const std::vector<GaloisField::Element>& orbit) {
  const std::size_t m = orbit.size();
  FieldMatrix<GaloisField> a(big, m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) a(j, i) = orbit[(i + j) % m];
  return a;
}

}  // namespace detail

/// First alpha in enumerate order of F_{q^{n+1}} whose Moore matrix is
/// nonsingular.
inline MooreData normal_basis_search(std::uint64_t p, unsigned e, unsigned n) {
  const auto base = GaloisField::canonical(p, e);
  Embedding emb = extension_of(base, n + 1);
  const GaloisField& big = emb.target();
  for (std::uint64_t a = 1; a < big.order(); ++a) {
    const auto alpha = static_cast<GaloisField::Element>(a);
    auto orbit = detail::q_orbit(big, e, alpha, n + 1);
    auto m = detail::moore_matrix(big, orbit);
    const auto det = m.det();
    if (det != 0) return MooreData{base, std::move(emb), alpha, std::move(orbit), std::move(m), det};
  }
  raise(ErrorKind::InvalidDescriptor, "no normal element found");  // excluded by the normal basis theorem
}

enum class ConstructionCase { Diagonal = 1, Cyclic = 2 };

struct ConstructionResult {
  std::uint64_t p;
  unsigned e;
  unsigned n;
  unsigned d;
  ConstructionCase which;
  std::vector<HomogeneousForm<GaloisField>> raw;  // over F_{q^{n+1}}
  LinearSystemOfForms<GaloisField> descended;     // over F_q
  MooreData moore;
};

/// G_j = sum_i alpha^{q^{i+j}} F_i, pulled back to F_q. Requires the input
/// family to be cycled by the q-power Frobenius: F_i^sigma = F_{i+1}.
inline std::vector<HomogeneousForm<GaloisField>> galois_descent(const std::vector<HomogeneousForm<GaloisField>>& family,
                                                                const MooreData& moore) {
  const std::size_t m = family.size();
  if (m != moore.size()) raise(ErrorKind::PreconditionViolated, "family size must equal n+1");
  const unsigned e = moore.base.degree();
  for (std::size_t i = 0; i < m; ++i) {
    if (!(family[i].field() == moore.big())) raise(ErrorKind::DescriptorMismatch, "family is not over F_{q^{n+1}}");
    if (!(frobenius_coefficients(family[i], e) == family[(i + 1) % m]))
      raise(ErrorKind::NotFrobeniusCyclic, "Frobenius does not send F_" + std::to_string(i) + " to F_" +
                                               std::to_string((i + 1) % m));
  }
  std::vector<HomogeneousForm<GaloisField>> out;
  for (std::size_t j = 0; j < m; ++j) {
    HomogeneousForm<GaloisField> g(moore.big(), family[0].nvars(), family[0].degree());
    for (std::size_t i = 0; i < m; ++i) g = g + family[i].scaled(moore.orbit[(i + j) % m]);
    if (!coefficients_fixed_by_frobenius(g, e))
      raise(ErrorKind::NotFrobeniusCyclic, "descended generator is not Frobenius-fixed");
    out.push_back(restrict_to(g, moore.embedding));
  }
  return out;
}

namespace detail {

inline ConstructionResult finish_construction(std::uint64_t p, unsigned e, unsigned n, unsigned d, ConstructionCase c,
                                              MooreData moore, std::vector<HomogeneousForm<GaloisField>> raw) {
  auto g = galois_descent(raw, moore);
  LinearSystemOfForms<GaloisField> sys(moore.base, n + 1, d, std::move(g));
  return ConstructionResult{p, e, n, d, c, std::move(raw), std::move(sys), std::move(moore)};
}

inline std::vector<HomogeneousForm<GaloisField>> moore_coordinates(const MooreData& moore) {
  std::vector<HomogeneousForm<GaloisField>> y;
  for (std::size_t j = 0; j < moore.size(); ++j) y.push_back(linear_form(moore.big(), moore.matrix.row(j)));
  return y;
}

inline void check_geometry(unsigned n, unsigned d) {
  if (n < 1) raise(ErrorKind::PreconditionViolated, "n must be >= 1");
  if (d < 1) raise(ErrorKind::PreconditionViolated, "d must be >= 1");
}

}  // namespace detail

/// p does not divide d: F_j = y_j^d in the Moore coordinates.
inline ConstructionResult construct_case1(std::uint64_t p, unsigned e, unsigned n, unsigned d) {
  detail::check_geometry(n, d);
  if (d % p == 0) raise(ErrorKind::CaseMismatch, "diagonal construction needs p not dividing d");
  auto moore = normal_basis_search(p, e, n);
  std::vector<HomogeneousForm<GaloisField>> raw;
  for (const auto& y : detail::moore_coordinates(moore)) raw.push_back(y.pow(d));
  return detail::finish_construction(p, e, n, d, ConstructionCase::Diagonal, std::move(moore), std::move(raw));
}

/// p divides d and not n+1: F_i = y_i^{d-1} y_{i+1}, indices mod n+1.
inline ConstructionResult construct_case2(std::uint64_t p, unsigned e, unsigned n, unsigned d) {
  detail::check_geometry(n, d);
  if (d % p != 0 || (n + 1) % p == 0)
    raise(ErrorKind::CaseMismatch, "cyclic construction needs p | d and p not dividing n+1");
  auto moore = normal_basis_search(p, e, n);
  const auto y = detail::moore_coordinates(moore);
  std::vector<HomogeneousForm<GaloisField>> raw;
  for (std::size_t i = 0; i <= n; ++i) raw.push_back(y[i].pow(d - 1) * y[(i + 1) % (n + 1)]);
  return detail::finish_construction(p, e, n, d, ConstructionCase::Cyclic, std::move(moore), std::move(raw));
}

/// Dispatches on whether p divides d. Rejects p | gcd(d, n+1).
inline ConstructionResult construct(std::uint64_t p, unsigned e, unsigned n, unsigned d) {
  detail::check_geometry(n, d);
  if (!detail::is_prime(p)) raise(ErrorKind::InvalidDescriptor, "p must be prime");
  if (std::gcd<std::uint64_t, std::uint64_t>(d, n + 1) % p == 0) {
    std::string msg = "p = " + std::to_string(p) + " divides gcd(d, n+1) = gcd(" + std::to_string(d) + ", " +
                      std::to_string(n + 1) + ")";
    if (p == 2 && d == 2 && n % 2 == 1)
      msg += "; in characteristic 2 no n-dimensional system of quadrics in P^n with n odd is K-smooth";
    raise(ErrorKind::HypothesisViolated, msg);
  }
  return d % p != 0 ? construct_case1(p, e, n, d) : construct_case2(p, e, n, d);
}

/// The first r+1 descended generators of the (p, e, n, d) construction.
inline LinearSystemOfForms<GaloisField> construct_smooth_system(std::uint64_t p, unsigned e, unsigned n, unsigned d,
                                                                unsigned r) {
  if (r > n)
    raise(ErrorKind::RankViolated, "r = " + std::to_string(r) + " > n = " + std::to_string(n) +
                                       ": no K-smooth linear system of projective dimension >= n+1 exists");
  if (r < 1) raise(ErrorKind::PreconditionViolated, "r must be >= 1");
  auto res = construct(p, e, n, d);
  std::vector<HomogeneousForm<GaloisField>> g(res.descended.generators().begin(),
                                              res.descended.generators().begin() + r + 1);
  return LinearSystemOfForms<GaloisField>(res.descended.field(), n + 1, d, std::move(g));
}

/// Coefficients replaced by their representatives in {0, ..., p-1} inside Q.
inline HomogeneousForm<RationalField> lift_form(const HomogeneousForm<GaloisField>& f) {
  if (!f.field().is_prime_field()) raise(ErrorKind::NotPrimeField, "lifting needs a prime base field");
  const RationalField q;
  return {f.poly().convert(q, [&](GaloisField::Element c) { return q.from_int(c); }), f.degree()};
}

inline LinearSystemOfForms<RationalField> lift_to_char_zero(const LinearSystemOfForms<GaloisField>& sys) {
  if (!sys.field().is_prime_field()) raise(ErrorKind::NotPrimeField, "lifting needs a prime base field");
  std::vector<HomogeneousForm<RationalField>> g;
  for (const auto& f : sys.generators()) g.push_back(lift_form(f));
  return LinearSystemOfForms<RationalField>(RationalField{}, sys.nvars(), sys.degree(), std::move(g));
}

/// Singular point of x_0^2 + G(x_1..x_n) in characteristic 2 with n odd: a
/// kernel vector t of the alternating matrix of G, completed by
/// t_0 = sqrt(G(t)). The point is rational over the base field.
inline SingularWitness<GaloisField> char2_quadric_singular_point(const HomogeneousForm<GaloisField>& f) {
  const GaloisField& k = f.field();
  if (k.characteristic() != 2) raise(ErrorKind::WrongCharacteristic, "the quadric singular point construction needs characteristic 2");
  if (f.degree() != 2) raise(ErrorKind::ShapeViolated, "form must be quadratic");
  const std::size_t nv = f.nvars();
  const std::size_t n = nv - 1;
  if (n % 2 == 0) raise(ErrorKind::EvenN, "n = " + std::to_string(n) + " is even");
  if (f.coefficient(Monomial::variable(nv, 0, 2)) != 1) raise(ErrorKind::ShapeViolated, "coefficient of x_0^2 must be 1");
  for (std::size_t j = 1; j < nv; ++j)
    if (f.coefficient(Monomial::variable(nv, 0) * Monomial::variable(nv, j)) != 0)
      raise(ErrorKind::ShapeViolated, "x_0 may only appear as x_0^2");

  FieldMatrix<GaloisField> m(k, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m(i, j) = f.coefficient(Monomial::variable(nv, i + 1) * Monomial::variable(nv, j + 1));
  const auto kernel = m.kernel();
  if (kernel.empty()) raise(ErrorKind::NoSolution, "alternating matrix of odd size is nonsingular");  // impossible
  std::vector<GaloisField::Element> pt(nv, 0);
  std::copy(kernel.front().begin(), kernel.front().end(), pt.begin() + 1);
  // G(t) = F(0, t) since the x_0 part is exactly x_0^2
  pt[0] = k.sqrt_char2(f.evaluate(pt));
  return SingularWitness<GaloisField>{k, std::move(pt), 1, {}};
}

enum class Char2Branch { Kernel, Surjective };

struct Char2Result {
  Char2Branch branch;
  std::vector<GaloisField::Element> coefficients;
  HomogeneousForm<GaloisField> member;
  SingularWitness<GaloisField> witness;
};

/// For n+1 independent quadrics in P^n (n odd, characteristic 2): either a
/// member lies in the kernel of the truncation map (singular at [1:0:...:0]),
/// or the map is bijective and the member mapping to x_0^2 is singular.
inline Char2Result char2_find_singular_member(const LinearSystemOfForms<GaloisField>& sys) {
  const GaloisField& k = sys.field();
  if (k.characteristic() != 2) raise(ErrorKind::PreconditionViolated, "characteristic must be 2");
  if (sys.degree() != 2) raise(ErrorKind::PreconditionViolated, "system must consist of quadrics");
  const std::size_t n = sys.nvars() - 1;
  if (n % 2 == 0) raise(ErrorKind::PreconditionViolated, "n must be odd");
  if (sys.dimension() != n) raise(ErrorKind::PreconditionViolated, "projective dimension must equal n");

  const auto psi = detail::psi_matrix(sys);
  const auto kernel = psi.kernel();
  if (!kernel.empty()) {
    auto member = sys.member(kernel.front());
    SingularWitness<GaloisField> w{k, base_point(k, sys.nvars()), 1, kernel.front()};
    return {Char2Branch::Kernel, kernel.front(), std::move(member), std::move(w)};
  }
  std::vector<GaloisField::Element> target(sys.nvars(), 0);
  target[0] = 1;  // x_0 * x_0
  auto a = psi.solve(target);
  auto member = sys.member(a);
  auto w = char2_quadric_singular_point(member);
  w.member = a;
  return {Char2Branch::Surjective, std::move(a), std::move(member), std::move(w)};
}

/// Three plane cubics over F_3 whose 13 rational members are all smooth
/// (x, y, z = x_0, x_1, x_2; coefficient -1 stored as 2).
inline LinearSystemOfForms<GaloisField> builtin_example_f3() {
  const auto k = GaloisField::prime(3);
  using T = std::vector<std::pair<std::vector<unsigned>, GaloisField::Element>>;
  const T f0{{{3, 0, 0}, 1}, {{2, 1, 0}, 1}, {{1, 2, 0}, 2}, {{0, 3, 0}, 1}, {{2, 0, 1}, 1},
             {{1, 1, 1}, 1}, {{0, 2, 1}, 1}, {{1, 0, 2}, 2}, {{0, 0, 3}, 1}};
  const T f1{{{3, 0, 0}, 1}, {{2, 1, 0}, 1}, {{2, 0, 1}, 2}, {{1, 1, 1}, 2}, {{0, 2, 1}, 1}, {{0, 0, 3}, 1}};
  const T f2{{{3, 0, 0}, 1}, {{2, 1, 0}, 2}, {{1, 2, 0}, 1}, {{0, 3, 0}, 1},
             {{2, 0, 1}, 1}, {{1, 1, 1}, 1}, {{0, 2, 1}, 1}, {{0, 1, 2}, 2}};
  return LinearSystemOfForms<GaloisField>(
      k, 3, 3, {HomogeneousForm<GaloisField>(k, 3, 3, f0), HomogeneousForm<GaloisField>(k, 3, 3, f1),
                HomogeneousForm<GaloisField>(k, 3, 3, f2)});
}

}  // namespace hypersmooth
