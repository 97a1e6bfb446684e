#include "wittmod/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wittmod/errors.hpp"
#include "wittmod/modules.hpp"
#include "wittmod/random.hpp"
#include "wittmod/serialize.hpp"
#include "wittmod/structure.hpp"

namespace wittmod::cli {

using nlohmann::ordered_json;

namespace {

ordered_json check(const std::string& name, bool pass) {
  ordered_json c;
  c["name"] = name;
  c["pass"] = pass;
  return c;
}

void sort_checks(ordered_json& body) {
  auto& checks = body["checks"];
  std::vector<ordered_json> v(checks.begin(), checks.end());
  std::stable_sort(v.begin(), v.end(), [](const ordered_json& x, const ordered_json& y) {
    return x["name"].get<std::string>() < y["name"].get<std::string>();
  });
  checks = ordered_json(v);
}

std::optional<ModuleDescriptor> load_module(const RunConfig& cfg) {
  if (cfg.module_path.empty()) return std::nullopt;
  std::ifstream in(cfg.module_path);
  if (!in) throw UsageError("cannot open module descriptor '" + cfg.module_path + "'");
  try {
    return module_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("bad module descriptor: " + std::string(e.what()));
  }
}

Scalar resolve_b(const std::optional<Scalar>& b, const std::optional<Scalar>& a, const char* which) {
  if (b && a) throw UsageError(std::string("give exactly one of --b/--a") + which);
  if (b) return *b;
  if (a) return 1 - *a;
  throw UsageError(std::string("one of --b/--a") + which + " is required");
}

CVec resolve_lambda(const RunConfig& cfg, const std::optional<CVec>& lambda) {
  if (!lambda) return CVec::constant(cfg.n, 1);
  return *lambda;
}

OmegaModule omega_from(const RunConfig& cfg) {
  if (auto d = load_module(cfg)) {
    if (auto* om = std::get_if<OmegaModule>(&*d)) return *om;
    throw UsageError("module descriptor is not of the omega family");
  }
  return OmegaModule(cfg.n, resolve_b(cfg.b, cfg.a, ""), resolve_lambda(cfg, cfg.lambda));
}

WeightModule weight_from(const RunConfig& cfg) {
  if (auto d = load_module(cfg)) {
    if (auto* wm = std::get_if<WeightModule>(&*d)) return *wm;
    throw UsageError("module descriptor is not of the weight family");
  }
  const CVec alpha = cfg.alpha ? *cfg.alpha : CVec(cfg.n);
  return WeightModule(cfg.n, resolve_b(cfg.b, cfg.a, ""), alpha, cfg.box);
}

// m from --m and/or a reducible --a.
int resolve_m(const RunConfig& cfg) {
  std::optional<int> from_a;
  if (cfg.a) {
    from_a = reducibility_index(cfg.n, *cfg.a);
    if (!from_a) throw UsageError("a = " + to_string(*cfg.a) + " is not of the form -m/(n+1)");
  } else if (cfg.b) {
    from_a = reducibility_index(cfg.n, 1 - *cfg.b);
    if (!from_a) throw UsageError("b = " + to_string(*cfg.b) + " does not give a = -m/(n+1)");
  }
  if (cfg.m && from_a && *cfg.m != *from_a) throw UsageError("--m disagrees with --a/--b");
  if (cfg.m) {
    if (*cfg.m < 0) throw UsageError("--m must be non-negative");
    return *cfg.m;
  }
  if (from_a) return *from_a;
  throw UsageError("--m (or a reducible --a) is required");
}

struct Tally {
  std::string name;
  int passed = 0, failed = 0, skipped = 0;
};

ordered_json tally_json(const Tally& t) {
  ordered_json c = check(t.name, t.failed == 0);
  c["passed"] = t.passed;
  c["failed"] = t.failed;
  c["skipped"] = t.skipped;
  return c;
}

ordered_json chain_json(const Poly& start, const WitnessChain& chain) {
  ordered_json c;
  c["poly"] = to_string(start);
  c["degrees"] = chain.degrees;
  c["reached_one"] = chain.reached_one;
  c["obstruction_degree"] = chain.obstruction_degree ? ordered_json(*chain.obstruction_degree) : ordered_json(nullptr);
  return c;
}

}  // namespace

bool Report::ok() const {
  if (!body.contains("checks")) return true;
  for (const auto& c : body["checks"])
    if (!c["pass"].get<bool>()) return false;
  return true;
}

Report cmd_check_axioms(const RunConfig& cfg) {
  const int samples = cfg.samples.value_or(200);
  if (samples < 0) throw UsageError("--samples must be non-negative");
  ordered_json body;
  body["command"] = "check-axioms";
  ordered_json failures = ordered_json::array();

  std::string family = cfg.family;
  if (auto d = load_module(cfg)) family = std::holds_alternative<OmegaModule>(*d) ? "omega" : "weight";

  if (family == "omega") {
    const OmegaModule m = omega_from(cfg);
    const std::size_t n = m.rank();
    body["module"] = to_json(m);
    body["seed"] = cfg.seed;
    body["samples"] = samples;
    Tally axiom{"module_axiom"}, twist{"twist_consistency"}, delta{"delta_identity"};
    for (int s = 0; s < samples; ++s) {
      const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(s));
      Sampler rng(seed);
      const WittElement x = rng.witt(n), y = rng.witt(n);
      const Poly p = rng.poly(n);
      const CVec u = rng.cvec(n), v = rng.cvec(n);
      const MultiIndex i = rng.multi_index(n), k = rng.multi_index(n);
      auto record = [&](Tally& t, bool ok) {
        if (ok) {
          ++t.passed;
        } else {
          ++t.failed;
          failures.push_back({{"check", t.name}, {"sample", s}, {"seed", seed}});
        }
      };
      record(axiom, module_axiom(m, x, y, p));
      record(twist, twist_consistency(m, u, k, p));
      record(delta, delta_check(m, u, v, i, k, p));
    }
    body["checks"] = {tally_json(axiom), tally_json(delta), tally_json(twist)};
  } else if (family == "weight") {
    const WeightModule m = weight_from(cfg);
    const std::size_t n = m.rank();
    body["module"] = to_json(m);
    body["seed"] = cfg.seed;
    body["samples"] = samples;
    Tally axiom{"module_axiom"}, diagonal{"cartan_diagonal"};
    const int reach = std::min(m.box(), Sampler::kIndexBound);
    for (int s = 0; s < samples; ++s) {
      const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(s));
      Sampler rng(seed);
      const WittElement x = rng.witt(n), y = rng.witt(n);
      WeightVec v(n);
      const int terms = rng.uniform(1, Sampler::kMaxTerms);
      for (int t = 0; t < terms; ++t) v.add(rng.multi_index(n, -reach, reach), rng.nonzero_rational());
      try {
        if (module_axiom(m, x, y, v)) {
          ++axiom.passed;
        } else {
          ++axiom.failed;
          failures.push_back({{"check", axiom.name}, {"sample", s}, {"seed", seed}});
        }
      } catch (const OverflowError&) {
        ++axiom.skipped;
      }
      // D(u,0) acts on each t^k by the scalar (u | alpha + k)
      const CVec u = rng.cvec(n);
      bool diag = true;
      for (const auto& [k, c] : v.coords()) {
        const WeightVec img = act_witt_weight(m, u, MultiIndex(n), WeightVec::basis(k));
        const Scalar expected = pairing(u, m.alpha()) + pairing(u, k);
        diag = diag && img == WeightVec::basis(k, expected);
      }
      if (diag) {
        ++diagonal.passed;
      } else {
        ++diagonal.failed;
        failures.push_back({{"check", diagonal.name}, {"sample", s}, {"seed", seed}});
      }
    }
    body["checks"] = {tally_json(diagonal), tally_json(axiom)};
    body["skipped_overflow"] = axiom.skipped;
  } else {
    throw UsageError("unknown family '" + family + "' (expected omega or weight)");
  }
  body["failures"] = failures;
  sort_checks(body);
  return {body};
}

Report cmd_analyze(const RunConfig& cfg) {
  const OmegaModule mod = omega_from(cfg);
  const std::size_t n = mod.rank();
  const Scalar a = mod.a();
  const auto m_opt = reducibility_index(n, a);
  const int samples = cfg.samples.value_or(20);

  ordered_json body;
  body["command"] = "analyze";
  body["n"] = n;
  body["m"] = m_opt ? ordered_json(*m_opt) : ordered_json(nullptr);
  body["a"] = to_string(a);
  body["b"] = to_string(mod.b());
  body["lambda"] = scalars_json(mod.lambda());
  body["verdict"] = m_opt ? "reducible" : "irreducible";
  ordered_json checks = ordered_json::array();

  // witness reductions on random polynomials of degree <= 5
  ordered_json chains = ordered_json::array();
  bool all_reach = true;
  for (int s = 0; s < samples; ++s) {
    Sampler rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(s)));
    const Poly p = rng.poly_of_degree(n, 5);
    const WitnessChain chain = irreducible_chain(mod, p);
    all_reach = all_reach && chain.reached_one;
    chains.push_back(chain_json(p, chain));
  }

  if (!m_opt) {
    const int bound = cfg.degree_bound.value_or(3);
    const ClosureResult cyc = sl_closure(mod, {Poly::constant(n, 1)}, bound, cfg.slack);
    const auto full = binomial(static_cast<unsigned>(n + bound), static_cast<unsigned>(n));
    body["degree_bound"] = bound;
    body["quotient_dim"] = nullptr;
    body["expected"] = nullptr;
    body["lowest_weight"] = nullptr;
    body["closure_stable"] = cyc.stable;
    checks.push_back(check("closure_stable", cyc.stable));
    checks.push_back(check("cyclic_on_one", cyc.basis.dimension() == full));
    checks.push_back(check("witness_reaches_one", all_reach));
  } else {
    const int m = *m_opt;
    const int bound = cfg.degree_bound.value_or(m + 2);
    if (bound < m + 1) throw UsageError("--degree-bound must be at least m+1");
    body["degree_bound"] = bound;
    const QuotientDimension q = quotient_dim_stable(n, m, 2);
    const auto expected = binomial(static_cast<unsigned>(m + n), static_cast<unsigned>(m));
    std::vector<int> hw(n, 0);
    hw[n - 1] = m;
    body["quotient_dim"] = q.value;
    body["expected"] = expected;
    checks.push_back(check("quotient_dim_matches_binomial", q.value == expected));
    checks.push_back(check("quotient_dim_stable", q.stable));
    checks.push_back(check("weyl_dimension_matches", weyl_dimension(hw) == expected));

    const LowestWeightReport lw = lowest_weight_report(n, m, mod.lambda());
    body["lowest_weight"] = scalars_json(lw.weight.values);
    checks.push_back(check("lowest_weight", lw.all_pass()));

    // generators of sl(n+1) map W into W
    const SubspaceBasis w = w_basis(n, m, bound);
    const SubspaceBasis w_next = w_basis(n, m, bound + 1);
    bool closed = true;
    for (const Poly& f : w.polys())
      for (const auto& [name, x] : sl_generators(n)) closed = closed && member_w(act_witt_element(mod, x, f), w_next);
    checks.push_back(check("w_closed_under_generators", closed));

    // W is generated by Y(m+1, 0, ..., 0)
    MultiIndex top(n);
    top[0] = m + 1;
    const ClosureResult gen = sl_closure(mod, {y_product({top, a})}, bound, cfg.slack);
    body["closure_stable"] = gen.stable;
    checks.push_back(check("closure_stable", gen.stable));
    checks.push_back(check("w_generated_by_single_y", gen.basis == w));

    bool obstructed = true;
    for (const auto& j : compositions(n, m + 1)) {
      const WitnessChain c = irreducible_chain(mod, y_product({j, a}));
      obstructed = obstructed && c.obstruction_degree && *c.obstruction_degree == m + 1;
    }
    checks.push_back(check("y_generators_obstruct_at_m_plus_1", obstructed));
  }
  body["witness"] = chains;
  body["checks"] = checks;
  sort_checks(body);
  return {body};
}

Report cmd_iso(const RunConfig& cfg) {
  const OmegaModule m1 = omega_from(cfg);
  const std::size_t n = m1.rank();
  const OmegaModule m2(n, resolve_b(cfg.b2, cfg.a2, "2"), cfg.lambda2 ? *cfg.lambda2 : m1.lambda());
  const ModuleParams p1 = extract_params(m1), p2 = extract_params(m2);
  auto params = [](const ModuleParams& p) {
    ordered_json j;
    j["a"] = to_string(p.a);
    j["lambda"] = scalars_json(p.lambda);
    return j;
  };
  ordered_json body;
  body["command"] = "iso";
  body["n"] = n;
  body["module1"] = to_json(m1);
  body["module2"] = to_json(m2);
  body["extracted1"] = params(p1);
  body["extracted2"] = params(p2);
  body["isomorphic"] = isomorphic(m1, m2);
  const bool w_family = reducibility_index(n, m1.a()) && reducibility_index(n, m2.a());
  body["w_isomorphic"] = w_family ? ordered_json(isomorphic_w(m1, m2)) : ordered_json(nullptr);
  body["checks"] = {check("extract_params_module1", p1 == ModuleParams{m1.a(), m1.lambda()}),
                    check("extract_params_module2", p2 == ModuleParams{m2.a(), m2.lambda()})};
  sort_checks(body);
  return {body};
}

Report cmd_member(const RunConfig& cfg) {
  if (cfg.poly.empty()) throw UsageError("--poly is required");
  const int m = resolve_m(cfg);
  const std::size_t n = cfg.n;
  const Poly p = parse_poly(cfg.poly, n);
  const int bound = cfg.degree_bound.value_or(std::max(m + 1, total_degree(p)));
  if (total_degree(p) > bound) throw UsageError("polynomial degree exceeds --degree-bound");
  const SubspaceBasis w = w_basis(n, m, bound);
  ordered_json body;
  body["command"] = "member";
  body["n"] = n;
  body["m"] = m;
  body["a"] = to_string(reducible_a(n, m));
  body["degree_bound"] = bound;
  body["poly"] = to_string(p);
  body["member"] = member_w(p, w);
  body["w_dimension"] = w.dimension();
  body["checks"] = ordered_json::array();
  return {body};
}

Report cmd_reduce(const RunConfig& cfg) {
  if (cfg.poly.empty()) throw UsageError("--poly is required");
  const OmegaModule mod = omega_from(cfg);
  const Poly p = parse_poly(cfg.poly, mod.rank());
  if (p.is_zero()) throw UsageError("cannot reduce the zero polynomial");
  ordered_json steps = ordered_json::array();
  Poly f = p;
  std::optional<int> obstruction;
  bool monotone = true;
  steps.push_back({{"degree", total_degree(f)}, {"poly", to_string(f)}});
  while (total_degree(f) > 0) {
    try {
      const Poly g = reduce_degree(mod, f);
      monotone = monotone && total_degree(g) < total_degree(f);
      f = g;
    } catch (const ObstructionError& e) {
      obstruction = e.degree();
      break;
    }
    steps.push_back({{"degree", total_degree(f)}, {"poly", to_string(f)}});
  }
  ordered_json body;
  body["command"] = "reduce";
  body["module"] = to_json(mod);
  body["steps"] = steps;
  body["reached_constant"] = !obstruction;
  body["obstruction_degree"] = obstruction ? ordered_json(*obstruction) : ordered_json(nullptr);
  body["checks"] = {check("degrees_strictly_decrease", monotone)};
  return {body};
}

Report cmd_quotient_dim(const RunConfig& cfg) {
  const int m = resolve_m(cfg);
  const std::size_t n = cfg.n;
  const auto expected = binomial(static_cast<unsigned>(m + n), static_cast<unsigned>(m));
  QuotientDimension q = quotient_dim_stable(n, m, 2);
  if (cfg.degree_bound) {
    if (*cfg.degree_bound < m + 1) throw UsageError("--degree-bound must be at least m+1");
    const std::size_t at = quotient_dim(n, m, *cfg.degree_bound);
    if (std::none_of(q.by_bound.begin(), q.by_bound.end(), [&](const auto& e) { return e.first == *cfg.degree_bound; }))
      q.by_bound.emplace_back(*cfg.degree_bound, at);
    q.stable = q.stable && at == q.value;
  }
  ordered_json by = ordered_json::array();
  for (const auto& [d, v] : q.by_bound) by.push_back({{"bound", d}, {"quotient_dim", v}});
  ordered_json body;
  body["command"] = "quotient-dim";
  body["n"] = n;
  body["m"] = m;
  body["a"] = to_string(reducible_a(n, m));
  body["by_bound"] = by;
  body["quotient_dim"] = q.value;
  body["expected"] = expected;
  body["checks"] = {check("matches_binomial", q.value == expected), check("stable_across_bounds", q.stable)};
  sort_checks(body);
  return {body};
}

Report run(const RunConfig& cfg) {
  if (cfg.command == "check-axioms") return cmd_check_axioms(cfg);
  if (cfg.command == "analyze") return cmd_analyze(cfg);
  if (cfg.command == "iso") return cmd_iso(cfg);
  if (cfg.command == "member") return cmd_member(cfg);
  if (cfg.command == "reduce") return cmd_reduce(cfg);
  if (cfg.command == "quotient-dim") return cmd_quotient_dim(cfg);
  throw UsageError("unknown command '" + cfg.command + "'");
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Witt and sl(n+1) module structure"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string b, a, lambda, alpha, b2, a2, lambda2;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank n")->check(CLI::PositiveNumber);
    sub->add_option("--b", b, "twist b (p/q)");
    sub->add_option("--a", a, "parameter a = 1 - b (p/q)");
    sub->add_option("--lambda", lambda, "lambda, e.g. (2,3)");
    sub->add_option("--alpha", alpha, "alpha for the weight family, e.g. (1/2,0)");
    sub->add_option("--m", cfg.m, "m with a = -m/(n+1)");
    sub->add_option("--degree-bound", cfg.degree_bound, "degree bound of the truncated polynomial space");
    sub->add_option("--slack", cfg.slack, "extra degrees explored by closure computations");
    sub->add_option("--samples", cfg.samples, "number of random samples");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--out", cfg.output_path, "write the JSON report to this file");
    sub->add_option("--module", cfg.module_path, "module descriptor JSON file");
    sub->add_flag("--json", cfg.json, "print the JSON report to stdout");
  };

  auto* axioms = app.add_subcommand("check-axioms", "randomized module-axiom checks");
  common(axioms);
  axioms->add_option("--family", cfg.family, "omega or weight");
  axioms->add_option("--N", cfg.box, "weight-module box radius");
  auto* analyze = app.add_subcommand("analyze", "irreducibility and submodule analysis");
  common(analyze);
  auto* iso = app.add_subcommand("iso", "isomorphism test between two Omega modules");
  common(iso);
  iso->add_option("--b2", b2, "twist of the second module");
  iso->add_option("--a2", a2, "parameter a of the second module");
  iso->add_option("--lambda2", lambda2, "lambda of the second module (default: same as first)");
  auto* member = app.add_subcommand("member", "membership in W_{1-a}");
  common(member);
  member->add_option("--poly", cfg.poly, "polynomial, e.g. \"d1^2 + d2\"")->required();
  auto* reduce = app.add_subcommand("reduce", "degree-reduction chain of a polynomial");
  common(reduce);
  reduce->add_option("--poly", cfg.poly, "polynomial")->required();
  auto* qdim = app.add_subcommand("quotient-dim", "dimension of Omega/W");
  common(qdim);

  std::vector<std::string> argv_storage{"wittmod"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!b.empty()) cfg.b = parse_scalar(b);
    if (!a.empty()) cfg.a = parse_scalar(a);
    if (!b2.empty()) cfg.b2 = parse_scalar(b2);
    if (!a2.empty()) cfg.a2 = parse_scalar(a2);
    if (!lambda.empty()) cfg.lambda = parse_cvec(lambda);
    if (!lambda2.empty()) cfg.lambda2 = parse_cvec(lambda2);
    if (!alpha.empty()) cfg.alpha = parse_cvec(alpha);

    const Report rep = run(cfg);
    const std::string text = rep.body.dump(2) + "\n";
    if (!cfg.output_path.empty()) {
      std::ofstream f(cfg.output_path, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + cfg.output_path + "'");
      f << text;
    }
    if (cfg.json || cfg.output_path.empty()) {
      out << text;
    } else {
      out << cfg.command << ": " << (rep.ok() ? "all checks passed" : "CHECK FAILED") << "\n";
    }
    return rep.ok() ? 0 : 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    // parse, dimension and domain errors in user-supplied parameters
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wittmod::cli
