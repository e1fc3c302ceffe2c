#pragma once

// Command-line front end. run() is separate from main() so tests can drive
// it in-process with captured streams.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypersmooth/constructions.hpp"
#include "hypersmooth/json_io.hpp"
#include "hypersmooth/random.hpp"

namespace hypersmooth::cli {

enum ExitCode : int { kSuccess = 0, kSingular = 1, kUsage = 2, kInconsistent = 3 };

struct RunConfig {
  std::uint64_t p = 0;
  unsigned e = 1;
  unsigned n = 0;
  unsigned d = 0;
  int r = -1;
  std::string input;
  std::string output;
  std::string system_file;
  bool oracle = false;
  unsigned max_ext = 4;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::size_t samples = 20;
  std::size_t random_count = 0;
  unsigned k = 1;
  bool verify = false;
  bool json = false;
  std::string example;
};

namespace detail {

inline nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::ParseError, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ParseError, path + ": " + e.what());
  }
}

inline void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) raise(ErrorKind::ParseError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

template <ExactField Field>
std::string point_string(const Field& k, const std::vector<typename Field::Element>& pt) {
  std::string s = "[";
  for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? " : " : "") + k.to_string(pt[i]);
  return s + "]";
}

template <ExactField Field>
std::string witness_string(const SingularWitness<Field>& w) {
  return point_string(w.field, w.point) + " over " + w.field.name();
}

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

inline int cmd_construct(const RunConfig& cfg, Streams s) {
  const unsigned r = cfg.r < 0 ? cfg.n : static_cast<unsigned>(cfg.r);
  if (r > cfg.n)
    raise(ErrorKind::RankViolated, "r = " + std::to_string(r) + " > n = " + std::to_string(cfg.n) +
                                       ": no K-smooth linear system of projective dimension >= n+1 exists");
  const auto res = construct(cfg.p, cfg.e, cfg.n, cfg.d);
  const auto sys = construct_smooth_system(cfg.p, cfg.e, cfg.n, cfg.d, r);
  const auto j = io::to_json(res, sys);
  if (!cfg.output.empty()) write_json(cfg.output, j);
  if (cfg.json || cfg.output.empty()) {
    s.out << j.dump(2) << "\n";
  } else {
    s.out << "case " << static_cast<int>(res.which) << " system over " << sys.field().name() << ": " << r + 1
          << " generators of degree " << cfg.d << " in P^" << cfg.n << "\n";
    s.out << "alpha = " << res.moore.big().to_string(res.moore.alpha) << " in " << res.moore.big().name()
          << ", Moore determinant " << res.moore.big().to_string(res.moore.determinant) << "\n";
    for (std::size_t i = 0; i < sys.generators().size(); ++i)
      s.out << "G_" << i << " = " << sys.generators()[i].to_string() << "\n";
  }
  return kSuccess;
}

inline int report_system(const LinearSystemOfForms<GaloisField>& sys, const RunConfig& cfg, Streams s) {
  VerifyOptions opts;
  opts.threads = cfg.threads;
  const auto rep = verify_system_K_smooth(sys, opts);
  auto j = io::to_json(rep, sys.field());
  bool consistent = true;
  if (cfg.oracle) {
    std::size_t agree = 0;
    for (const auto& mv : rep.verdicts) {
      const auto member = sys.member(mv.coefficients);
      const auto found = search_singular_point(member, cfg.max_ext);
      bool ok = false;
      if (mv.verdict.smooth()) ok = !found;
      else if (mv.verdict.singular()) ok = found.has_value() || mv.verdict.witness().extension_degree > cfg.max_ext;
      if (ok) {
        ++agree;
      } else {
        consistent = false;
        s.err << "oracle disagreement on member " << point_string(sys.field(), mv.coefficients) << "\n";
      }
    }
    j["oracle_agreement"] = agree;
    if (!cfg.json) s.out << "oracle agrees on " << agree << "/" << rep.members << " members (extension degree <= " << cfg.max_ext << ")\n";
  }
  if (cfg.json) {
    s.out << j.dump(2) << "\n";
  } else {
    s.out << rep.smooth_count() << "/" << rep.members << " members smooth\n";
    if (rep.witness)
      s.out << "member " << point_string(sys.field(), rep.witness->member) << " is singular at "
            << witness_string(*rep.witness) << "\n";
  }
  if (!consistent) return kInconsistent;
  return rep.k_smooth ? kSuccess : kSingular;
}

inline int cmd_verify(const RunConfig& cfg, Streams s) {
  const auto j = read_json(cfg.input);
  if (io::is_rational(j.at("field")))
    raise(ErrorKind::PreconditionViolated, "verify enumerates K-members and needs a finite field; use lift for Q");
  return report_system(io::system_from_json<GaloisField>(j), cfg, s);
}

template <ExactField Field>
int check_form(const HomogeneousForm<Field>& f, const RunConfig& cfg, Streams s) {
  const auto v = is_smooth(f);
  if (cfg.json) {
    s.out << io::verdict_to_json(v, f.field()).dump(2) << "\n";
  } else if (v.smooth()) {
    s.out << "smooth (certificate with " << v.certificate().size() << " basis elements)\n";
  } else if (v.singular()) {
    s.out << "singular at " << witness_string(v.witness()) << "\n";
  } else {
    s.out << "singular (certificate); no witness located by the bounded search\n";
  }
  return v.smooth() ? kSuccess : kSingular;
}

inline int cmd_check(const RunConfig& cfg, Streams s) {
  const auto j = read_json(cfg.input);
  const nlohmann::json& form = j.contains("generators") ? j.at("generators").at(0) : j;
  if (io::is_rational(form.at("field"))) return check_form(io::form_from_json<RationalField>(form), cfg, s);
  return check_form(io::form_from_json<GaloisField>(form), cfg, s);
}

inline int cmd_lift(const RunConfig& cfg, Streams s) {
  const auto sys = io::system_from_json<GaloisField>(read_json(cfg.input));
  const auto lifted = lift_to_char_zero(sys);
  if (!cfg.output.empty()) write_json(cfg.output, io::to_json(lifted));
  const RationalField q;
  Rng rng(cfg.seed);
  std::size_t smooth = 0;
  nlohmann::json samples = nlohmann::json::array();
  std::optional<std::string> first_bad;
  for (std::size_t t = 0; t < cfg.samples; ++t) {
    std::vector<Rational> a;
    do {
      a.clear();
      for (std::size_t i = 0; i < lifted.generators().size(); ++i)
        a.push_back(q.from_int(static_cast<long long>(uniform_below(rng, 11)) - 5));
    } while (std::all_of(a.begin(), a.end(), [&](const Rational& x) { return q.is_zero(x); }));
    const auto v = is_smooth(lifted.member(a));
    if (v.smooth()) ++smooth;
    else if (!first_bad) first_bad = point_string(q, a);
    nlohmann::json c = nlohmann::json::array();
    for (const auto& x : a) c.push_back(x.get_str());
    samples.push_back({{"member", c}, {"verdict", v.smooth() ? "smooth" : (v.singular() ? "singular" : "inconclusive")}});
  }
  if (cfg.json) {
    s.out << nlohmann::json{{"lifted", io::to_json(lifted)}, {"samples", samples}, {"smooth", smooth}}.dump(2) << "\n";
  } else {
    s.out << "lifted " << lifted.generators().size() << " generators from " << sys.field().name() << " to Q\n";
    s.out << smooth << "/" << cfg.samples << " sampled members smooth over Q\n";
    if (first_bad) s.out << "member " << *first_bad << " is not smooth\n";
  }
  return smooth == cfg.samples ? kSuccess : kSingular;
}

inline int cmd_quadrics(const RunConfig& cfg, Streams s) {
  std::vector<LinearSystemOfForms<GaloisField>> systems;
  if (!cfg.system_file.empty()) {
    systems.push_back(io::system_from_json<GaloisField>(read_json(cfg.system_file)));
  } else {
    if (cfg.random_count == 0) raise(ErrorKind::PreconditionViolated, "quadrics needs --system FILE or --random N");
    if (cfg.n % 2 == 0) raise(ErrorKind::PreconditionViolated, "n must be odd for the characteristic-2 quadric obstruction");
    const auto k = GaloisField::canonical(2, cfg.k);
    Rng rng(cfg.seed);
    for (std::size_t t = 0; t < cfg.random_count; ++t) systems.push_back(random_system(k, cfg.n + 1, 2, cfg.n + 1, rng));
  }
  nlohmann::json out = nlohmann::json::array();
  std::size_t verified = 0;
  for (std::size_t t = 0; t < systems.size(); ++t) {
    const auto& sys = systems[t];
    const auto res = char2_find_singular_member(sys);
    const bool ok = witness_verifies(res.member, res.witness);
    if (ok) ++verified;
    const char* branch = res.branch == Char2Branch::Kernel ? "kernel" : "surjective";
    if (cfg.json) {
      out.push_back({{"branch", branch},
                     {"member", io::to_json(res.member)},
                     {"witness", io::witness_to_json(res.witness, sys.field())},
                     {"verified", ok}});
    } else {
      s.out << "system " << t << ": " << branch << " branch, member " << point_string(sys.field(), res.coefficients)
            << " = " << res.member.to_string() << ", singular at " << witness_string(res.witness)
            << (ok ? "" : " (FAILED re-verification)") << "\n";
    }
  }
  if (cfg.json) s.out << out.dump(2) << "\n";
  else s.out << verified << "/" << systems.size() << " systems have a verified singular member\n";
  return verified == systems.size() ? kSingular : kInconsistent;
}

inline int cmd_example(const RunConfig& cfg, Streams s) {
  if (cfg.example != "f3") raise(ErrorKind::PreconditionViolated, "unknown example '" + cfg.example + "' (available: f3)");
  const auto sys = builtin_example_f3();
  if (!cfg.verify) {
    if (cfg.json) {
      s.out << io::to_json(sys).dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < sys.generators().size(); ++i)
        s.out << "F_" << i << " = " << sys.generators()[i].to_string() << "\n";
    }
    return kSuccess;
  }
  return report_system(sys, cfg, s);
}

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::WitnessNotFoundWithinCap:
    case ErrorKind::BudgetExceeded:
      return kInconsistent;
    default:
      return kUsage;
  }
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Constructs and certifies linear systems of smooth hypersurfaces over finite fields", "hypersmooth"};
  app.require_subcommand(1);

  auto* construct_cmd = app.add_subcommand("construct", "build a K-smooth system of dimension r");
  construct_cmd->add_option("--p", cfg.p, "characteristic")->required();
  construct_cmd->add_option("--e", cfg.e, "base field is F_{p^e}");
  construct_cmd->add_option("--n", cfg.n, "ambient P^n")->required();
  construct_cmd->add_option("--d", cfg.d, "degree")->required();
  construct_cmd->add_option("--r", cfg.r, "projective dimension (default n)");
  construct_cmd->add_option("-o,--output", cfg.output, "write the system JSON here");
  construct_cmd->add_flag("--json", cfg.json, "print JSON to stdout");

  auto* verify_cmd = app.add_subcommand("verify", "check every K-member of a system");
  verify_cmd->add_option("file", cfg.input, "system JSON")->required();
  verify_cmd->add_flag("--oracle", cfg.oracle, "cross-check each verdict by exhaustive point search");
  verify_cmd->add_option("--max-ext", cfg.max_ext, "oracle extension degree bound");
  verify_cmd->add_option("--threads", cfg.threads, "parallel member checks");
  verify_cmd->add_flag("--json", cfg.json, "machine report");

  auto* check_cmd = app.add_subcommand("check", "decide smoothness of a single form");
  check_cmd->add_option("file", cfg.input, "form JSON")->required();
  check_cmd->add_flag("--json", cfg.json, "machine report");

  auto* lift_cmd = app.add_subcommand("lift", "lift a prime-field system to Q and sample members");
  lift_cmd->add_option("file", cfg.input, "system JSON over F_p")->required();
  lift_cmd->add_option("--samples", cfg.samples, "random Q-members to check");
  lift_cmd->add_option("--seed", cfg.seed, "random seed");
  lift_cmd->add_option("-o,--output", cfg.output, "write the lifted system JSON here");
  lift_cmd->add_flag("--json", cfg.json, "machine report");

  auto* quad_cmd = app.add_subcommand("quadrics", "find singular members of quadric systems in characteristic 2");
  auto* sys_opt = quad_cmd->add_option("--system", cfg.system_file, "system JSON over F_{2^k}");
  auto* rnd_opt = quad_cmd->add_option("--random", cfg.random_count, "number of random systems");
  sys_opt->excludes(rnd_opt);
  quad_cmd->add_option("--seed", cfg.seed, "random seed");
  quad_cmd->add_option("--k", cfg.k, "field F_{2^k}");
  quad_cmd->add_option("--n", cfg.n, "odd ambient dimension");
  quad_cmd->add_flag("--json", cfg.json, "machine report");

  auto* example_cmd = app.add_subcommand("example", "built-in example systems");
  example_cmd->add_option("name", cfg.example, "example name (f3)")->required();
  example_cmd->add_flag("--verify", cfg.verify, "verify every member");
  example_cmd->add_flag("--json", cfg.json, "machine report");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  const detail::Streams s{out, err};
  try {
    if (*construct_cmd) return detail::cmd_construct(cfg, s);
    if (*verify_cmd) return detail::cmd_verify(cfg, s);
    if (*check_cmd) return detail::cmd_check(cfg, s);
    if (*lift_cmd) return detail::cmd_lift(cfg, s);
    if (*quad_cmd) return detail::cmd_quadrics(cfg, s);
    if (*example_cmd) return detail::cmd_example(cfg, s);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hypersmooth::cli
