#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbitkit/catalog.hpp"
#include "orbitkit/catalog_algebras.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/io.hpp"
#include "orbitkit/report.hpp"

using namespace orbitkit;
using report::Json;

namespace {

constexpr int kUsageError = 1;
constexpr int kComputationError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string catalog;
  std::vector<std::string> f;
  std::string g;
  std::uint64_t seed = 0;
  bool json = false;
  unsigned degree = 2;
  std::string tol = "1/1000000";
  std::size_t budget = 10000;
  bool critical = false;
};

struct Input {
  std::string name;
  LieAlgebra algebra;
  std::optional<CatalogEntry> entry;
};

std::uint64_t default_seed() {
  const char* s = std::getenv("ORBITKIT_SEED");
  if (!s || !*s) return 0;
  try {
    std::size_t pos = 0;
    auto v = std::stoull(s, &pos);
    if (pos != std::string(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("ORBITKIT_SEED is not a non-negative integer: ") + s);
  }
}

Input load(const Options& o) {
  if (o.file.empty() == o.catalog.empty()) throw UsageError("exactly one of --file and --catalog is required");
  Input in;
  if (!o.catalog.empty()) {
    in.entry = catalog_entry(o.catalog);
    if (!in.entry) throw UsageError("unknown catalog entry '" + o.catalog + "'");
    in.name = in.entry->name;
    in.algebra = in.entry->algebra;
    return in;
  }
  std::ifstream is(o.file);
  if (!is) throw UsageError("cannot read " + o.file);
  std::stringstream ss;
  ss << is.rdbuf();
  in.algebra = parse_algebra(ss.str());
  in.name = std::filesystem::path(o.file).stem().string();
  return in;
}

Functional functional(const Input& in, const Options& o) {
  if (o.f.size() > 1) throw UsageError("this command takes a single --f");
  if (!o.f.empty()) return parse_functional(in.algebra, o.f[0]);
  if (in.entry) return in.entry->reference;
  throw UsageError("--f is required with --file");
}

std::vector<FlowStep> sequence(const Input& in) {
  if (in.entry) return in.entry->sequence;
  std::vector<FlowStep> seq;
  for (std::size_t i = 0; i < in.algebra.dim(); ++i)
    seq.push_back(FlowStep{{{in.algebra.basis_vector(i), "t_" + in.algebra.names()[i]}}});
  return seq;
}

std::vector<RSubspace> flag(const Input& in) {
  if (in.entry && !in.entry->flag.empty()) return in.entry->flag;
  return ideal_flag(in.algebra);
}

// The catalog invariant, specialized to f when f has the shape of the symbolic reference.
std::optional<DualPolynomial> catalog_invariant(const Input& in, const Functional& f) {
  if (!in.entry || !in.entry->invariant) return std::nullopt;
  const auto& ref = in.entry->symbolic_reference;
  std::map<std::string, ExpPoly> bind;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    auto vars = ref[i].variables();
    if (vars.empty()) {
      if (!(ref[i] == ExpPoly(f[i]))) return std::nullopt;
    } else if (vars.size() == 1 && ref[i] == ExpPoly::variable(*vars.begin()) && !bind.count(*vars.begin())) {
      bind[*vars.begin()] = ExpPoly(f[i]);
    } else {
      return std::nullopt;
    }
  }
  return in.entry->invariant->substitute_constants(bind);
}

void print_subspace(const LieAlgebra& g, const std::string& label, const RSubspace& s) {
  std::cout << label << ": " << format_subspace(g, s) << " (dim " << s.dim() << ")\n";
}

void print_closure(const ClosureVerdict& v, const std::vector<std::string>& coords, const std::string& indent) {
  std::cout << indent << "verdict: " << to_string(v.kind) << "\n";
  switch (v.certificate) {
    case ClosureVerdict::Certificate::Invariant:
      std::cout << indent << "certificate: invariant " << to_string(*v.invariant) << " = " << to_string(v.value)
                << " at g\n";
      break;
    case ClosureVerdict::Certificate::Sign:
      std::cout << indent << "certificate: component " << coords[v.component] << " has sign " << v.sign
                << " on the orbit, g has " << to_string(v.value) << "\n";
      break;
    case ClosureVerdict::Certificate::Constant:
      std::cout << indent << "certificate: component " << coords[v.component] << " is constant, g has "
                << to_string(v.value) << "\n";
      break;
    case ClosureVerdict::Certificate::None: break;
  }
  if (v.kind == ClosureVerdict::Kind::InClosureNumeric || v.kind == ClosureVerdict::Kind::ExactPoint) {
    std::cout << indent << "witness:";
    for (const auto& [k, x] : v.params) std::cout << " " << k << "=" << to_string(x);
    for (const auto& [form, x] : v.exps) std::cout << " exp(" << to_string(form) << ")=" << to_string(x);
    std::cout << "\n" << indent << "squared distance: " << to_string(v.distance2) << " ~ "
              << report::decimal(v.distance2) << "\n";
  }
  std::cout << indent << "evaluations: " << v.evaluations << " of " << v.budget << ", seed " << v.seed << "\n";
  for (const auto& n : v.notes) std::cout << indent << "note: " << n << "\n";
}

int emit(const Options& o, const std::string& command, const Input& in, const Json& result) {
  if (o.json) std::cout << report::dump(report::envelope(command, in.name, result));
  return 0;
}

int cmd_analyze(const Options& o, const Input& in) {
  Json r = report::analysis(in.algebra);
  if (!o.json) {
    const auto& g = in.algebra;
    std::cout << "algebra: " << in.name << "\ndim: " << g.dim() << "\n" << emit_algebra(g);
    std::cout << "solvable: " << (r["solvable"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "nilpotent: " << (r["nilpotent"].get<bool>() ? "yes" : "no") << "\n";
    print_subspace(g, "center", center(g));
    print_subspace(g, "commutator ideal", commutator_ideal(g));
    if (r.contains("nilradical")) {
      std::cout << "nilradical: " << r["nilradical"]["display"].get<std::string>() << "\n";
      auto kind = r["exponential"]["kind"].get<std::string>();
      std::cout << "exponential: "
                << (kind == "Exponential" ? "yes" : kind == "NotExponential" ? "no" : "unknown") << " ("
                << r["exponential"]["note"].get<std::string>() << ")\n";
      std::cout << "roots:\n";
      for (const auto& root : r["roots"])
        std::cout << "  " << root["display"].get<std::string>() << " multiplicity "
                  << root["multiplicity"].get<std::size_t>() << "\n";
    }
  }
  return emit(o, "analyze", in, r);
}

int cmd_stabilizer(const Options& o, const Input& in, const Functional& f) {
  Json r = report::stabilizer(in.algebra, f);
  if (!o.json) {
    const auto& g = in.algebra;
    auto n = nilradical(g);
    auto m = stabilizer_ideal(g, f, n);
    std::cout << "functional: " << format_covector(g, f) << "\n";
    print_subspace(g, "stabilizer", stabilizer(g, f));
    print_subspace(g, "nilradical", n);
    print_subspace(g, "stabilizer ideal", m);
    std::cout << "stabilizer ideal brackets:\n" << emit_algebra(subalgebra(g, m).algebra);
    std::cout << "orbit dimension: " << r["orbit_dimension"].get<std::size_t>() << "\n";
  }
  return emit(o, "stabilizer", in, r);
}

int cmd_condition_r(const Options& o, const Input& in, const Functional& f) {
  auto c = condition_R_at(in.algebra, f);
  if (!o.json) {
    const auto& g = in.algebra;
    std::cout << "functional: " << format_covector(g, f) << "\n";
    std::cout << "condition (R): " << (c.holds ? "holds" : "fails") << "\n";
    print_subspace(g, "stabilizer ideal", c.m);
    print_subspace(g, "m_infinity", c.m_inf);
    std::cout << "f on m_infinity:";
    for (std::size_t i = 0; i < c.values.size(); ++i)
      std::cout << " f(" << format_vector(g, c.m_inf.basis()[i]) << ")=" << to_string(c.values[i]);
    std::cout << "\nverified: " << (verify(g, c) ? "yes" : "no") << "\n";
  }
  return emit(o, "condition-r", in, report::condition_r(in.algebra, c));
}

int cmd_polarize(const Options& o, const Input& in, const Functional& f) {
  auto fl = flag(in);
  auto p = vergne_polarization(in.algebra, fl, f);
  auto rep = check_polarization(in.algebra, f, p);
  if (!o.json) {
    const auto& g = in.algebra;
    std::cout << "functional: " << format_covector(g, f) << "\n";
    print_subspace(g, "polarization", p);
    std::cout << "subalgebra: " << (rep.is_subalgebra ? "yes" : "no") << "\nisotropic: "
              << (rep.is_isotropic ? "yes" : "no") << "\ndimension: " << (rep.dimension_ok ? "ok" : "wrong")
              << "\ncontains stabilizer: " << (rep.contains_stabilizer ? "yes" : "no")
              << "\ncertified: " << (rep.certified() ? "yes" : "no") << "\n";
  }
  return emit(o, "polarize", in, report::polarization(in.algebra, fl, rep));
}

int cmd_orbit(const Options& o, const Input& in) {
  if (o.f.size() > 1) throw UsageError("orbit takes a single --f");
  std::vector<ExpPoly> f;
  if (!o.f.empty()) f = parse_symbolic_functional(in.algebra, o.f[0]);
  else if (in.entry) f = in.entry->symbolic_reference;
  else throw UsageError("--f is required with --file");
  auto om = orbit_map(in.algebra, f, sequence(in));
  if (!o.json) {
    std::cout << "parameters:";
    for (const auto& p : om.params) std::cout << " " << p;
    std::cout << "\n";
    for (std::size_t i = 0; i < om.components.size(); ++i)
      std::cout << om.basis[i] << ": " << to_string(om.components[i]) << "\n";
  }
  return emit(o, "orbit", in, report::orbit(om));
}

int cmd_invariants(const Options& o, const Input& in) {
  if (o.degree < 1) throw UsageError("--degree must be at least 1");
  const auto& g = in.algebra;
  Json r;
  Json invs = Json::array();
  for (const auto& q : invariant_space(g, o.degree)) invs.push_back(to_string(q));
  r["degree"] = o.degree;
  r["invariants"] = invs;
  Json semis = Json::array();
  for (const auto& s : semi_invariants(g, o.degree))
    semis.push_back({{"polynomial", to_string(s.q)}, {"weight", report::covector(g, s.weight)}});
  r["semi_invariants"] = semis;
  if (!o.f.empty() || in.entry) {
    auto f = functional(in, o);
    auto om = orbit_map(g, symbolic(f), sequence(in));
    Json van = Json::array();
    for (const auto& q : vanishing_polynomials(om, o.degree)) van.push_back(to_string(q));
    r["functional"] = report::covector(g, f);
    r["vanishing_on_orbit"] = van;
  }
  if (!o.json) {
    std::cout << "invariants up to degree " << o.degree << ":\n";
    for (const auto& q : r["invariants"]) std::cout << "  " << q.get<std::string>() << "\n";
    std::cout << "semi-invariants:\n";
    for (const auto& s : semi_invariants(g, o.degree))
      std::cout << "  " << to_string(s.q) << "  weight " << format_covector(g, s.weight) << "\n";
    if (r.contains("vanishing_on_orbit")) {
      std::cout << "vanishing on the orbit of " << format_covector(g, functional(in, o)) << ":\n";
      for (const auto& q : r["vanishing_on_orbit"]) std::cout << "  " << q.get<std::string>() << "\n";
    }
  }
  return emit(o, "invariants", in, r);
}

int cmd_closure(const Options& o, const Input& in, const Functional& f, const Functional& target,
                const ClosureOptions& opts) {
  const auto& g = in.algebra;
  if (o.critical) {
    std::function<bool(const Functional&)> desc;
    if (in.entry && in.entry->critical) desc = in.entry->critical;
    auto v = critical_test(g, f, target, sequence(in), o.degree, opts, desc);
    if (!o.json) {
      std::cout << "critical test: " << to_string(v.kind) << "\n";
      auto n = subalgebra(g, nilradical(g));
      std::cout << "restricted to the nilradical:\n";
      print_closure(v.restricted, n.algebra.names(), "  ");
      if (v.full) {
        std::cout << "full orbit:\n";
        print_closure(*v.full, g.names(), "  ");
      }
      if (v.description_agrees)
        std::cout << "agrees with the known critical set: " << (*v.description_agrees ? "yes" : "no") << "\n";
      for (const auto& n2 : v.notes) std::cout << "note: " << n2 << "\n";
    }
    Json r = report::critical(g, v);
    r["functional"] = report::covector(g, f);
    r["target"] = report::vector(target);
    return emit(o, "closure-test", in, r);
  }
  auto om = orbit_map(g, symbolic(f), sequence(in));
  std::vector<DualPolynomial> invs;
  if (auto q = catalog_invariant(in, f)) invs.push_back(*q);
  for (auto& q : vanishing_polynomials(om, o.degree)) invs.push_back(std::move(q));
  auto v = closure_membership(om, target, invs, opts);
  if (!o.json) {
    std::cout << "functional: " << format_covector(g, f) << "\ntarget: " << format_covector(g, target) << "\n";
    print_closure(v, om.basis, "");
    std::cout << "verified: " << (verify(om, target, v) ? "yes" : "no") << "\n";
  }
  Json r = report::closure(om, target, v);
  r["functional"] = report::covector(g, f);
  return emit(o, "closure-test", in, r);
}

int cmd_regularity(const Options& o, const Input& in) {
  std::vector<Functional> samples;
  for (const auto& text : o.f) samples.push_back(parse_functional(in.algebra, text));
  if (samples.empty() && in.entry) samples.push_back(in.entry->reference);
  auto r = regularity_report(in.algebra, samples, o.seed);
  if (!o.json) {
    std::cout << "verdict: " << to_string(r.verdict) << "(" << r.reason << ")\n";
    for (const auto& b : r.branches) std::cout << "branch: " << b << "\n";
    for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
    if (r.certificate) {
      const auto& g = in.algebra;
      std::cout << "certificate at " << format_covector(g, r.certificate->f) << ": m_infinity "
                << format_subspace(g, r.certificate->m_inf) << "\n";
    }
    std::cout << "functionals checked: " << r.functionals_checked << ", seed " << r.seed << "\n";
    std::cout << "verified: " << (verify(in.algebra, r) ? "yes" : "no") << "\n";
  }
  return emit(o, "regularity-report", in, report::regularity(in.algebra, r));
}

int cmd_catalog(const Options& o) {
  if (!o.file.empty()) throw UsageError("catalog does not take --file");
  Json r;
  if (o.catalog.empty()) {
    Json list = Json::array();
    for (const auto& e : catalog()) list.push_back(report::catalog_entry(e, false));
    r["entries"] = list;
    if (!o.json)
      for (const auto& e : catalog())
        std::cout << e.name << "  dim " << e.algebra.dim() << "  " << to_string(e.expected_verdict) << "  "
                  << e.description << "\n";
    if (o.json) std::cout << report::dump(report::envelope("catalog", "", r));
    return 0;
  }
  auto e = catalog_entry(o.catalog);
  if (!e) throw UsageError("unknown catalog entry '" + o.catalog + "'");
  r = report::catalog_entry(*e, true);
  if (!o.json) {
    std::cout << e->name << ": " << e->description << "\n" << emit_algebra(e->algebra);
    std::cout << "reference: " << format_covector(e->algebra, e->reference) << "\n";
    std::cout << "expected: " << to_string(e->expected_verdict) << "(" << e->expected_reason << ")\n";
    if (e->invariant) std::cout << "invariant: " << to_string(*e->invariant) << "\n";
    if (e->central) std::cout << "central element: " << to_string(*e->central) << "\n";
    for (const auto& rep : e->representations) {
      std::cout << "representation " << rep.name << ":\n";
      for (std::size_t i = 0; i < rep.assignment.size(); ++i)
        std::cout << "  " << e->algebra.names()[i] << "' -> " << to_string(rep.assignment[i]) << "\n";
    }
    for (const auto& a : e->assumptions) std::cout << "assumption: " << a << "\n";
  }
  if (o.json) std::cout << report::dump(report::envelope("catalog", e->name, r));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitkit: exact computations for exponential Lie algebras"};
  app.require_subcommand(1);
  Options o;
  try {
    o.seed = default_seed();
  } catch (const UsageError& e) {
    std::cerr << "orbitkit: " << e.what() << "\n";
    return kUsageError;
  }

  struct Sub {
    const char* name;
    const char* help;
    bool f, g, degree, search;
  };
  const std::vector<Sub> subs = {
      {"analyze", "structure of the algebra: series, nilradical, roots, exponentiality", false, false, false, false},
      {"stabilizer", "stabilizer and stabilizer ideal of a functional", true, false, false, false},
      {"condition-r", "condition (R) certificate at a functional", true, false, false, false},
      {"polarize", "Vergne polarization along the ideal flag", true, false, false, false},
      {"orbit", "symbolic coadjoint orbit map", true, false, false, false},
      {"invariants", "polynomial invariants and semi-invariants", true, false, true, false},
      {"closure-test", "decide membership of g in the orbit closure", true, true, true, true},
      {"regularity-report", "run the regularity decision cascade", true, false, false, false},
      {"catalog", "list catalog entries, or show one with --catalog", false, false, false, false},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    if (std::string(s.name) != "catalog") sub->add_option("--file", o.file, "algebra definition file");
    sub->add_option("--catalog", o.catalog, "catalog entry name");
    sub->add_flag("--json", o.json, "emit a JSON report");
    sub->add_option("--seed", o.seed, "random seed (default $ORBITKIT_SEED or 0)");
    if (s.f) sub->add_option("--f", o.f, "functional, e.g. \"e3=1,e0=2\"");
    if (s.g) sub->add_option("--g", o.g, "target functional")->required();
    if (s.degree) sub->add_option("--degree", o.degree, "polynomial degree bound");
    if (s.search) {
      sub->add_option("--tol", o.tol, "distance tolerance, a rational");
      sub->add_option("--budget", o.budget, "objective evaluation budget");
      sub->add_flag("--critical", o.critical, "run the critical-functional test");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  if (command == "catalog") {
    try {
      return cmd_catalog(o);
    } catch (const UsageError& e) {
      std::cerr << "orbitkit: " << e.what() << "\n";
      return kUsageError;
    }
  }

  Input in;
  std::optional<Functional> f, target;
  ClosureOptions opts;
  try {
    in = load(o);
    if (command == "stabilizer" || command == "condition-r" || command == "polarize" || command == "closure-test")
      f = functional(in, o);
    if (command == "closure-test") {
      target = parse_functional(in.algebra, o.g);
      auto tol = parse_rational(o.tol);
      if (!tol || sgn(*tol) <= 0) throw UsageError("--tol must be a positive rational");
      opts.tol = *tol;
      opts.budget = o.budget;
      opts.seed = o.seed;
    }
  } catch (const UsageError& e) {
    std::cerr << "orbitkit: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "orbitkit: invalid input: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (command == "analyze") return cmd_analyze(o, in);
    if (command == "stabilizer") return cmd_stabilizer(o, in, *f);
    if (command == "condition-r") return cmd_condition_r(o, in, *f);
    if (command == "polarize") return cmd_polarize(o, in, *f);
    if (command == "orbit") return cmd_orbit(o, in);
    if (command == "invariants") return cmd_invariants(o, in);
    if (command == "closure-test") return cmd_closure(o, in, *f, *target, opts);
    if (command == "regularity-report") return cmd_regularity(o, in);
  } catch (const UsageError& e) {
    std::cerr << "orbitkit: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "orbitkit: " << e.what() << "\n";
    return kComputationError;
  }
  return kUsageError;
}
