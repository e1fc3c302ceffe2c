#pragma once

// JSON interchange:
//   field    {"p": int, "e": int, "modulus": [c_0..c_e] | null}   (Q is p = 0)
//   element  [c_0, ..., c_{e-1}]                                  (Q: ["a/b"])
//   form     {"field", "nvars", "degree", "terms": [{"exps", "coeff"}]}
//   system   {"field", "nvars", "degree", "generators": [form, ...]}

#include <string>
#include <vector>

#include <json.hpp>

#include "hypersmooth/constructions.hpp"
#include "hypersmooth/error.hpp"
#include "hypersmooth/fields.hpp"
#include "hypersmooth/groebner.hpp"
#include "hypersmooth/multipoly.hpp"
#include "hypersmooth/rational.hpp"
#include "hypersmooth/smoothness.hpp"

namespace hypersmooth::io {

using nlohmann::json;

inline json to_json(const GaloisField& f) {
  json j{{"p", f.characteristic()}, {"e", f.degree()}};
  j["modulus"] = f.is_prime_field() ? json(nullptr) : json(f.modulus());
  return j;
}

inline json to_json(const RationalField&) { return json{{"p", 0}, {"e", 1}, {"modulus", nullptr}}; }

/// True when the field fragment denotes Q.
inline bool is_rational(const json& field) {
  try {
    return field.at("p").get<long long>() == 0;
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, e.what());
  }
}

inline GaloisField galois_field_from_json(const json& j) {
  try {
    const auto p = j.at("p").get<std::uint64_t>();
    const auto e = j.at("e").get<unsigned>();
    std::optional<std::vector<std::uint64_t>> mod;
    if (j.contains("modulus") && !j.at("modulus").is_null()) mod = j.at("modulus").get<std::vector<std::uint64_t>>();
    return GaloisField(p, e, mod);
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, e.what());
  }
}

inline json element_to_json(const GaloisField& f, GaloisField::Element a) { return json(f.coeffs(a)); }
inline json element_to_json(const RationalField&, const Rational& a) { return json::array({a.get_str()}); }

inline GaloisField::Element element_from_json(const GaloisField& f, const json& j) {
  try {
    return f.from_coeffs(j.get<std::vector<std::uint64_t>>());
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, e.what());
  }
}

inline Rational element_from_json(const RationalField&, const json& j) {
  try {
    const json& v = j.is_array() ? j.at(0) : j;
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    return parse_rational(v.get<std::string>());
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, e.what());
  }
}

template <ExactField Field>
Field field_from_json(const json& j) {
  if constexpr (std::is_same_v<Field, GaloisField>) {
    if (is_rational(j)) raise(ErrorKind::DescriptorMismatch, "expected a finite field");
    return galois_field_from_json(j);
  } else {
    if (!is_rational(j)) raise(ErrorKind::DescriptorMismatch, "expected the rational field");
    return RationalField{};
  }
}

template <ExactField Field>
json terms_to_json(const Polynomial<Field>& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exps", m.exponents()}, {"coeff", element_to_json(p.field(), c)}});
  return terms;
}

template <ExactField Field>
json to_json(const HomogeneousForm<Field>& f) {
  return json{{"field", to_json(f.field())}, {"nvars", f.nvars()}, {"degree", f.degree()}, {"terms", terms_to_json(f.poly())}};
}

template <ExactField Field>
HomogeneousForm<Field> form_from_json(const json& j, const Field& k, std::size_t nvars, unsigned degree) {
  try {
    std::vector<std::pair<std::vector<unsigned>, typename Field::Element>> terms;
    for (const auto& t : j.at("terms")) terms.emplace_back(t.at("exps").get<std::vector<unsigned>>(), element_from_json(k, t.at("coeff")));
    return HomogeneousForm<Field>(k, nvars, degree, terms);
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, e.what());
  }
}

template <ExactField Field>
HomogeneousForm<Field> form_from_json(const json& j) {
  try {
    const Field k = field_from_json<Field>(j.at("field"));
    return form_from_json(j, k, j.at("nvars").get<std::size_t>(), j.at("degree").get<unsigned>());
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, e.what());
  }
}

template <ExactField Field>
json to_json(const LinearSystemOfForms<Field>& s) {
  json gens = json::array();
  for (const auto& g : s.generators()) gens.push_back(to_json(g));
  return json{{"field", to_json(s.field())}, {"nvars", s.nvars()}, {"degree", s.degree()}, {"generators", gens}};
}

template <ExactField Field>
LinearSystemOfForms<Field> system_from_json(const json& j) {
  try {
    const Field k = field_from_json<Field>(j.at("field"));
    const auto nvars = j.at("nvars").get<std::size_t>();
    const auto degree = j.at("degree").get<unsigned>();
    std::vector<HomogeneousForm<Field>> gens;
    for (const auto& g : j.at("generators")) gens.push_back(form_from_json(g, k, nvars, degree));
    return LinearSystemOfForms<Field>(k, nvars, degree, std::move(gens));
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, e.what());
  }
}

template <ExactField Field>
json to_json(const GroebnerBasis<Field>& b) {
  json elems = json::array();
  for (const auto& g : b.elements()) elems.push_back({{"terms", terms_to_json(g)}});
  return json{{"field", to_json(b.field())}, {"nvars", b.nvars()}, {"order", GroebnerBasis<Field>::order()}, {"elements", elems}};
}

template <ExactField Field>
json to_json(const SingularWitness<Field>& w) {
  json pt = json::array();
  for (const auto& x : w.point) pt.push_back(element_to_json(w.field, x));
  return json{{"field", to_json(w.field)}, {"extension_degree", w.extension_degree}, {"point", pt}, {"member", nullptr}};
}

// member coordinates live in the base field; the caller passes it
template <ExactField Field>
json witness_to_json(const SingularWitness<Field>& w, const Field& base) {
  json j = to_json(w);
  if (!w.member.empty()) {
    json m = json::array();
    for (const auto& x : w.member) m.push_back(element_to_json(base, x));
    j["member"] = m;
  }
  return j;
}

template <ExactField Field>
json verdict_to_json(const SmoothnessVerdict<Field>& v, const Field& base) {
  if (v.smooth()) return json{{"verdict", "smooth"}, {"certificate_size", v.certificate().size()}};
  if (v.singular()) return json{{"verdict", "singular"}, {"witness", witness_to_json(v.witness(), base)}};
  return json{{"verdict", "inconclusive"}, {"max_degree_tried", std::get<SearchInconclusive>(v.value()).max_degree_tried}};
}

inline json to_json(const SystemReport<GaloisField>& r, const GaloisField& base) {
  json verdicts = json::array();
  for (const auto& mv : r.verdicts) {
    json c = json::array();
    for (auto x : mv.coefficients) c.push_back(element_to_json(base, x));
    json v = verdict_to_json(mv.verdict, base);
    v["member"] = c;
    verdicts.push_back(v);
  }
  return json{{"members", r.members},
              {"verdicts", verdicts},
              {"k_smooth", r.k_smooth},
              {"witness", r.witness ? witness_to_json(*r.witness, base) : json(nullptr)}};
}

/// The emitted system (possibly truncated to r+1 generators) plus the
/// construction data.
inline json to_json(const ConstructionResult& c, const LinearSystemOfForms<GaloisField>& emitted) {
  json j = to_json(emitted);
  j["alpha"] = element_to_json(c.moore.big(), c.moore.alpha);
  j["alpha_field"] = to_json(c.moore.big());
  j["case"] = static_cast<int>(c.which);
  j["moore_det"] = element_to_json(c.moore.big(), c.moore.determinant);
  return j;
}

}  // namespace hypersmooth::io
