#pragma once

// Jacobian-criterion smoothness: Groebner certificates, brute-force witness
// search over extension fields, and the truncation map keeping the monomials
// divisible by x_0^{d-1}.

#include <algorithm>
#include <future>
#include <optional>
#include <thread>
#include <type_traits>
#include <variant>
#include <vector>

#include "hypersmooth/error.hpp"
#include "hypersmooth/fields.hpp"
#include "hypersmooth/groebner.hpp"
#include "hypersmooth/multipoly.hpp"
#include "hypersmooth/rational.hpp"

namespace hypersmooth {

template <ExactField Field>
struct SingularWitness {
  using Element = typename Field::Element;

  /// Field the coordinates live in (the base field or an extension of it).
  Field field;
  std::vector<Element> point;
  /// Degree of `field` over the form's base field (1 when rational over it).
  unsigned extension_degree = 1;
  /// Member coordinates [a_0 : ... : a_r] when the witness refutes a system.
  std::vector<Element> member;
};

template <ExactField Field>
struct Smooth {
  GroebnerBasis<Field> certificate;
};

template <ExactField Field>
struct Singular {
  SingularWitness<Field> witness;
};

struct SearchInconclusive {
  unsigned max_degree_tried = 0;
};

template <ExactField Field>
class SmoothnessVerdict {
 public:
  using Value = std::variant<Smooth<Field>, Singular<Field>, SearchInconclusive>;

  SmoothnessVerdict(Value v) : v_(std::move(v)) {}

  bool smooth() const { return std::holds_alternative<Smooth<Field>>(v_); }
  bool singular() const { return std::holds_alternative<Singular<Field>>(v_); }
  bool inconclusive() const { return std::holds_alternative<SearchInconclusive>(v_); }

  const GroebnerBasis<Field>& certificate() const { return std::get<Smooth<Field>>(v_).certificate; }
  const SingularWitness<Field>& witness() const { return std::get<Singular<Field>>(v_).witness; }
  SingularWitness<Field>& witness() { return std::get<Singular<Field>>(v_).witness; }
  const Value& value() const { return v_; }

 private:
  Value v_;
};

struct SmoothnessOptions {
  /// Largest extension degree the witness search may climb to.
  unsigned max_ext_degree = 6;
  /// Skip extension degrees whose P^n has more points than this.
  std::uint64_t point_budget = 20'000'000;
  /// Throw WitnessNotFoundWithinCap instead of returning SearchInconclusive.
  bool require_witness = true;
  /// Coordinate bound for the integer-point search over Q.
  long rational_search_height = 3;
  GroebnerOptions groebner;
};

/// [F, dF/dx_0, ..., dF/dx_n] with zero partials dropped; F always stays.
template <ExactField Field>
std::vector<HomogeneousForm<Field>> jacobian_generators(const HomogeneousForm<Field>& f) {
  if (f.is_zero()) raise(ErrorKind::PreconditionViolated, "the zero form has no hypersurface");
  std::vector<HomogeneousForm<Field>> out{f};
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    auto d = f.partial_derivative(i);
    if (!d.is_zero()) out.push_back(std::move(d));
  }
  return out;
}

/// Jacobian criterion at one point: F and all partials vanish.
template <ExactField Field>
bool is_singular_point(const HomogeneousForm<Field>& f, const std::vector<typename Field::Element>& point) {
  const Field& k = f.field();
  if (std::all_of(point.begin(), point.end(), [&](const auto& x) { return k.is_zero(x); })) return false;
  if (!k.is_zero(f.evaluate(point))) return false;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (!k.is_zero(f.partial_derivative(i).evaluate(point))) return false;
  return true;
}

/// Re-checks a witness, embedding F into the witness field when needed.
template <ExactField Field>
bool witness_verifies(const HomogeneousForm<Field>& f, const SingularWitness<Field>& w) {
  if (w.point.size() != f.nvars()) return false;
  if constexpr (std::is_same_v<Field, GaloisField>) {
    if (!(w.field == f.field())) return is_singular_point(embed(f, Embedding(f.field(), w.field)), w.point);
  }
  return is_singular_point(f, w.point);
}

namespace detail {

// Flattened form for the point-search inner loop.
struct CompiledForm {
  std::vector<GaloisField::Element> coeffs;
  std::vector<std::vector<unsigned>> exps;
};

inline CompiledForm compile(const HomogeneousForm<GaloisField>& f) {
  CompiledForm c;
  for (const auto& [m, x] : f.terms()) {
    c.coeffs.push_back(x);
    c.exps.push_back(m.exponents());
  }
  return c;
}

inline bool vanishes(const GaloisField& k, const CompiledForm& c,
                     const std::vector<std::vector<GaloisField::Element>>& powers) {
  GaloisField::Element v = 0;
  for (std::size_t t = 0; t < c.coeffs.size(); ++t) {
    GaloisField::Element x = c.coeffs[t];
    const auto& e = c.exps[t];
    for (std::size_t i = 0; i < e.size() && x != 0; ++i)
      if (e[i]) x = k.mul(x, powers[i][e[i]]);
    v = k.add(v, x);
  }
  return v == 0;
}

}  // namespace detail

/// Exhaustive scan of P^n(F_{q^k}) for k = 1..max_ext_degree; the first
/// singular point found is returned. A miss proves nothing.
inline std::optional<SingularWitness<GaloisField>> search_singular_point(const HomogeneousForm<GaloisField>& f,
                                                                          unsigned max_ext_degree,
                                                                          std::uint64_t point_budget = 20'000'000) {
  if (max_ext_degree == 0) raise(ErrorKind::PreconditionViolated, "extension degree bound must be >= 1");
  if (f.is_zero()) raise(ErrorKind::PreconditionViolated, "the zero form has no hypersurface");
  const auto& base = f.field();
  const std::size_t n = f.nvars() - 1;
  for (unsigned k = 1; k <= max_ext_degree; ++k) {
    const std::uint64_t big_q = [&] {
      std::uint64_t v = 1;
      for (unsigned i = 0; i < k; ++i) {
        v *= base.order();
        if (v > GaloisField::kMaxOrder) return std::uint64_t{0};
      }
      return v;
    }();
    if (big_q == 0) break;
    long double count = 0, pw = 1;
    for (std::size_t i = 0; i <= n; ++i, pw *= static_cast<long double>(big_q)) count += pw;
    if (count > static_cast<long double>(point_budget)) break;

    std::optional<Embedding> emb;
    GaloisField field = base;
    HomogeneousForm<GaloisField> g = f;
    if (k > 1) {
      emb.emplace(extension_of(base, k));
      field = emb->target();
      g = embed(f, *emb);
    }
    std::vector<detail::CompiledForm> forms{detail::compile(g)};
    for (std::size_t i = 0; i <= n; ++i) {
      auto d = g.partial_derivative(i);
      if (!d.is_zero()) forms.push_back(detail::compile(d));
    }
    const unsigned d = f.degree();
    std::vector<std::vector<GaloisField::Element>> powers(n + 1, std::vector<GaloisField::Element>(d + 1, 1));
    std::optional<SingularWitness<GaloisField>> found;
    for_each_projective_point(big_q, n, [&](const std::vector<GaloisField::Element>& pt) {
      for (std::size_t i = 0; i <= n; ++i)
        for (unsigned e = 1; e <= d; ++e) powers[i][e] = field.mul(powers[i][e - 1], pt[i]);
      for (const auto& c : forms)
        if (!detail::vanishes(field, c, powers)) return true;
      found = SingularWitness<GaloisField>{field, pt, k, {}};
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

namespace detail {

inline std::optional<SingularWitness<RationalField>> search_rational_point(const HomogeneousForm<RationalField>& f,
                                                                            long height) {
  const RationalField q;
  const std::size_t nv = f.nvars();
  std::vector<long> c(nv, -height);
  while (true) {
    std::vector<Rational> pt;
    for (auto x : c) pt.push_back(q.from_int(x));
    if (is_singular_point(f, pt)) return SingularWitness<RationalField>{q, pt, 1, {}};
    std::size_t i = nv;
    while (i > 0 && ++c[i - 1] > height) c[--i] = -height;
    if (i == 0) return std::nullopt;
  }
}

}  // namespace detail

/// Smooth with a Groebner certificate when V(F, dF) is empty in P^n;
/// otherwise Singular with a witness located by search.
template <ExactField Field>
SmoothnessVerdict<Field> is_smooth(const HomogeneousForm<Field>& f, const SmoothnessOptions& opts = {}) {
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : jacobian_generators(f)) gens.push_back(g.poly());
  auto basis = buchberger(gens, opts.groebner);
  if (is_projectively_empty(basis)) return {Smooth<Field>{std::move(basis)}};

  std::optional<SingularWitness<Field>> w;
  unsigned tried = 0;
  if constexpr (std::is_same_v<Field, GaloisField>) {
    w = search_singular_point(f, opts.max_ext_degree, opts.point_budget);
    tried = opts.max_ext_degree;
    if (!w && opts.require_witness)
      raise(ErrorKind::WitnessNotFoundWithinCap,
            "certificate says singular but no point found up to extension degree " + std::to_string(tried) + " for " +
                f.to_string());
  } else {
    w = detail::search_rational_point(f, opts.rational_search_height);
  }
  if (w) return {Singular<Field>{std::move(*w)}};
  return {SearchInconclusive{tried}};
}

/// Keeps exactly the monomials whose x_0-exponent is at least d-1.
template <ExactField Field>
HomogeneousForm<Field> psi_projection(const HomogeneousForm<Field>& f) {
  const unsigned keep = f.degree() == 0 ? 0 : f.degree() - 1;
  std::vector<typename Polynomial<Field>::Term> t;
  for (const auto& term : f.terms())
    if (term.first[0] >= keep) t.push_back(term);
  return {Polynomial<Field>(f.field(), f.nvars(), std::move(t)), f.degree()};
}

/// [1 : 0 : ... : 0]
template <ExactField Field>
std::vector<typename Field::Element> base_point(const Field& k, std::size_t nvars) {
  std::vector<typename Field::Element> p(nvars, k.zero());
  p[0] = k.one();
  return p;
}

template <ExactField Field>
struct SystemMember {
  std::vector<typename Field::Element> coefficients;
  HomogeneousForm<Field> form;
};

namespace detail {

// Column i holds the coefficients of x_0^{d-1} x_j (j = 0..n) in generator i.
template <ExactField Field>
FieldMatrix<Field> psi_matrix(const LinearSystemOfForms<Field>& sys) {
  const std::size_t nv = sys.nvars();
  const unsigned d = sys.degree();
  FieldMatrix<Field> m(sys.field(), nv, sys.generators().size());
  for (std::size_t j = 0; j < nv; ++j) {
    Monomial mono = Monomial::variable(nv, 0, d - 1) * Monomial::variable(nv, j);
    for (std::size_t i = 0; i < sys.generators().size(); ++i) m(j, i) = sys.generators()[i].coefficient(mono);
  }
  return m;
}

}  // namespace detail

/// A nonzero member killed by the truncation map, hence singular at
/// [1:0:...:0]. Always exists once the system has at least n+2 generators.
template <ExactField Field>
SystemMember<Field> singular_member_at_base_point(const LinearSystemOfForms<Field>& sys) {
  if (sys.degree() == 0) raise(ErrorKind::PreconditionViolated, "degree must be positive");
  const auto kernel = detail::psi_matrix(sys).kernel();
  if (kernel.empty())
    raise(ErrorKind::PreconditionViolated, "truncation map is injective on this system (r+1 = " +
                                               std::to_string(sys.generators().size()) + " <= n+1)");
  return {kernel.front(), sys.member(kernel.front())};
}

template <ExactField Field>
struct MemberVerdict {
  std::vector<typename Field::Element> coefficients;
  SmoothnessVerdict<Field> verdict;
};

template <ExactField Field>
struct SystemReport {
  std::size_t members = 0;
  std::vector<MemberVerdict<Field>> verdicts;
  bool k_smooth = false;
  std::optional<SingularWitness<Field>> witness;

  std::size_t smooth_count() const {
    return static_cast<std::size_t>(
        std::count_if(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.verdict.smooth(); }));
  }
};

struct VerifyOptions {
  SmoothnessOptions smoothness;
  /// Worker threads for member checks; results keep enumeration order.
  unsigned threads = 1;
};

/// Runs is_smooth on every member indexed by P^r(F_q).
inline SystemReport<GaloisField> verify_system_K_smooth(const LinearSystemOfForms<GaloisField>& sys,
                                                         const VerifyOptions& opts = {}) {
  const auto points = enumerate_projective_points(sys.field(), sys.dimension());
  std::vector<std::optional<SmoothnessVerdict<GaloisField>>> results(points.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < points.size(); i += step) results[i] = is_smooth(sys.member(points[i]), opts.smoothness);
  };
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, work, t, threads));
    for (auto& j : jobs) j.get();
  }
  SystemReport<GaloisField> report;
  report.members = points.size();
  report.k_smooth = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto& v = *results[i];
    if (!v.smooth()) report.k_smooth = false;
    if (v.singular() && !report.witness) {
      report.witness = v.witness();
      report.witness->member = points[i];
    }
    report.verdicts.push_back({points[i], std::move(v)});
  }
  return report;
}

}  // namespace hypersmooth
