#include "polarcrit/commands.hpp"

#include <chrono>
#include <fstream>

#include "polarcrit/critpoints.hpp"
#include "polarcrit/random.hpp"

namespace polarcrit {

namespace {

class Stopwatch {
 public:
  double lap_ms() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json header(const std::string& command) { return {{"format", kFormatVersion}, {"command", command}}; }

Json common_inputs(const std::string& file, const FieldSpec& field, const GlobalOptions& opts) {
  return {{"file", file}, {"field", field.describe()}, {"seed", opts.seed}};
}

std::uint32_t other_prime(std::uint32_t p) { return p == kSecondaryPrime ? kDefaultPrime : kSecondaryPrime; }

std::string big(const mpz_class& z) { return z.get_str(); }

Json hypotheses_json(const HypothesisReport& h) {
  return {{"finite", h.finite},
          {"radical", h.radical},
          {"smooth_sampled", h.smooth_sampled},
          {"count", h.count},
          {"multiplicity", h.multiplicity},
          {"warnings", h.warnings}};
}

Json report_json(const ParametrizationReport& r) {
  return {{"squarefree", r.squarefree},
          {"degrees", r.degrees_ok},
          {"normalization", r.normalization_ok},
          {"membership", r.membership_ok},
          {"failures", r.failures},
          {"ok", r.ok()}};
}

// The generators plus one seeded random combination of the critical minors;
// a point satisfies the combination for all minors at once with high
// probability, without composing thousands of minors modulo q.
template <class F>
std::vector<Poly<F>> critical_check_equations(const VarietySpec<F>& v, const Poly<F>& g, std::uint64_t seed) {
  const F& field = v.ring()->field();
  auto all = crit_ideal(v, g, empty_directions(field, v.nvars()), 0);
  std::vector<Poly<F>> out(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(v.generators.size()));
  Rng rng(derive_seed(seed, 0xC4EC));
  Poly<F> combo(v.ring());
  for (std::size_t k = v.generators.size(); k < all.size(); ++k) {
    combo = combo + all[k].scaled(field.from_int(draw_nonzero(rng, 1000)));
  }
  out.push_back(combo);
  return out;
}

template <class F>
std::vector<typename F::Elem> parse_linear_form(const std::string& text, const RingPtr<F>& ring) {
  return linear_coefficients(parse_poly<F>(text, ring));
}

template <class F>
Json crit_json(const CritResult<F>& r, const ParametrizationReport& validation) {
  return {{"count", r.count},
          {"multiplicity", r.multiplicity},
          {"count_only", r.count_only},
          {"reseeded", r.reseeded},
          {"hypotheses", hypotheses_json(r.hypotheses)},
          {"validation", report_json(validation)},
          {"parametrization", parametrization_json(r.parametrization)}};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

FieldSpec resolve_field(const ProblemFile& problem, const GlobalOptions& opts) {
  FieldSpec spec = opts.field ? *opts.field : problem.field.value_or(FieldSpec{});
  if (opts.prime) {
    if (spec.kind == FieldKind::Rationals && opts.field) {
      throw AlgebraError(ErrorCode::InvalidArgument, "--prime conflicts with --field rationals");
    }
    if (*opts.prime < 3 || *opts.prime >= (1U << 31) || !is_prime(*opts.prime)) {
      throw AlgebraError(ErrorCode::InvalidArgument, "--prime must be an odd prime below 2^31");
    }
    spec = {FieldKind::PrimeField, *opts.prime};
  }
  return spec;
}

int exit_code_of(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const Json::exception*>(&e)) return kExitParse;
  if (auto* a = dynamic_cast<const AlgebraError*>(&e)) {
    switch (a->code()) {
      case ErrorCode::Fail:
      case ErrorCode::Unstable:
        return kExitFail;
      default:
        return kExitValidation;
    }
  }
  return kExitError;
}

CommandResult guarded(const std::string& command, const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    Json doc = header(command);
    doc["status"] = "error";
    Json err = {{"message", e.what()}};
    if (auto* a = dynamic_cast<const AlgebraError*>(&e)) err["code"] = error_code_name(a->code());
    if (dynamic_cast<const ParseError*>(&e)) err["code"] = "PARSE";
    doc["error"] = err;
    return {exit_code_of(e), doc};
  }
}

CommandResult cmd_bound(const BoundArgs& args) {
  return guarded("bound", [&] {
    BoundArgs a = args;
    if (a.file) {
      ProblemFile pf = read_problem_file(*a.file);
      if (!a.delta) a.delta = pf.delta;
      if (!a.nvars && !pf.vars.empty()) a.nvars = pf.vars.size();
      if (a.naive_degrees.empty()) a.naive_degrees = pf.naive_degrees;
    }
    if (!a.delta) throw ParseError("no delta vector: pass --delta or a file with a DELTA section", 0);
    if (a.degree == 0) throw AlgebraError(ErrorCode::InvalidArgument, "objective degree D must be positive");
    const DeltaVector& delta = *a.delta;
    std::size_t d = delta.dim();
    std::size_t n = a.nvars.value_or(d + 1);
    if (n <= d) throw AlgebraError(ErrorCode::InvalidArgument, "need more variables than the dimension");

    Json doc = header("bound");
    doc["inputs"] = {{"delta", delta_json(delta)}, {"D", a.degree}, {"n", n}, {"indices", a.indices}};
    Json rows = Json::array();
    for (std::size_t i : a.indices) {
      mpz_class closed = theorem1_bound(delta, a.degree, i);
      Json row = {{"i", i}, {"bound", big(closed)}};
      mpz_class pipeline = pipeline_bound(delta, a.degree, i, n);
      row["bidegree_pipeline"] = big(pipeline);
      if (pipeline != closed) {
        throw AlgebraError(ErrorCode::InvalidArgument, "bidegree pipeline disagrees with the closed form");
      }
      rows.push_back(row);
    }
    doc["results"] = {{"bounds", rows}};
    if (!a.naive_degrees.empty()) {
      doc["results"]["naive"] = big(naive_bound(a.naive_degrees, a.degree, n));
      doc["inputs"]["naive_degrees"] = a.naive_degrees;
    }
    doc["status"] = "ok";
    return CommandResult{kExitOk, doc};
  });
}

CommandResult cmd_delta(const std::string& file, const GlobalOptions& opts) {
  return guarded("delta", [&] {
    ProblemFile pf = read_problem_file(file);
    FieldSpec spec = resolve_field(pf, opts);
    Json doc = header("delta");
    doc["inputs"] = common_inputs(file, spec, opts);
    Stopwatch clock;
    DeltaVector delta = with_field(spec, [&](const auto& field) {
      auto tp = instantiate(pf, field);
      return delta_of_variety(tp.variety, opts.seed);
    });
    Json timings = {{"delta_ms", clock.lap_ms()}};
    Json warnings = Json::array();
    if (spec.kind == FieldKind::PrimeField && opts.second_prime) {
      PrimeField other(other_prime(spec.prime));
      DeltaVector check = delta_of_variety(instantiate(pf, other).variety, opts.seed);
      timings["second_prime_ms"] = clock.lap_ms();
      if (!(check == delta)) {
        warnings.push_back("delta differs at prime " + std::to_string(other.modulus()) + ": " +
                           delta_json(check).dump());
      }
    }
    doc["results"] = {{"delta", delta_json(delta)}};
    if (pf.delta) {
      doc["results"]["matches_file"] = *pf.delta == delta;
    }
    doc["warnings"] = warnings;
    if (opts.timings) doc["timings"] = timings;
    bool ok = !pf.delta || *pf.delta == delta;
    doc["status"] = ok ? "ok" : "mismatch";
    return CommandResult{ok ? kExitOk : kExitValidation, doc};
  });
}

namespace {

template <class F>
CommandResult crit_with_field(const F& field, const ProblemFile& pf, const FieldSpec& spec, const std::string& file,
                              const GlobalOptions& opts, const std::optional<std::string>& objective,
                              const std::optional<std::string>& u_text) {
  auto tp = instantiate(pf, field);
  if (objective) tp.objective = parse_poly<F>(*objective, tp.ring);
  if (!tp.objective) throw ParseError("no objective: add an OBJECTIVE section or pass --objective", 0);
  const Poly<F>& g = *tp.objective;
  const VarietySpec<F>& v = tp.variety;
  std::optional<std::vector<typename F::Elem>> u;
  if (u_text) u = parse_linear_form<F>(*u_text, tp.ring);
  if (opts.route != "algorithm1" && opts.route != "direct" && opts.route != "both") {
    throw AlgebraError(ErrorCode::InvalidArgument, "route must be algorithm1, direct or both");
  }

  Json doc = header("crit");
  doc["inputs"] = common_inputs(file, spec, opts);
  doc["inputs"]["route"] = opts.route;
  doc["inputs"]["objective"] = to_string(g);
  Json timings = Json::object();
  Json warnings = Json::array();
  Json results = Json::object();
  Stopwatch clock;
  auto equations = critical_check_equations(v, g, opts.seed);
  bool valid = true;

  std::optional<CritResult<F>> alg1, direct;
  if (opts.route != "direct") {
    alg1 = run_algorithm1(v, g, opts.seed, u);
    timings["algorithm1_ms"] = clock.lap_ms();
    auto report = check_parametrization(alg1->parametrization, equations);
    valid = valid && report.ok();
    results["algorithm1"] = crit_json(*alg1, report);
    if (alg1->reseeded) warnings.push_back("algorithm1 failed once and was reseeded");
  }
  if (opts.route != "algorithm1") {
    direct = crit_points_direct(v, g, opts.seed, u);
    timings["direct_ms"] = clock.lap_ms();
    auto report = check_parametrization(direct->parametrization, equations);
    valid = valid && report.ok();
    results["direct"] = crit_json(*direct, report);
    for (const auto& w : direct->hypotheses.warnings) warnings.push_back(w);
  }
  timings["validation_ms"] = clock.lap_ms();
  if (alg1 && direct) {
    bool agree = alg1->count == direct->count;
    if (agree) {
      auto common = change_primitive_element(alg1->parametrization, direct->parametrization.lambda);
      agree = common == direct->parametrization;
    }
    results["agree"] = agree;
    if (!agree) {
      warnings.push_back("routes disagree");
      valid = false;
    }
  }
  const CritResult<F>& main = alg1 ? *alg1 : *direct;
  results["count"] = main.count;
  results["multiplicity"] = direct ? direct->multiplicity : main.multiplicity;
  if (pf.delta) {
    mpz_class bound = theorem1_bound(*pf.delta, static_cast<unsigned long>(g.total_degree()), 0);
    results["bound"] = big(bound);
    results["within_bound"] = mpz_class(static_cast<unsigned long>(results["multiplicity"].get<std::size_t>())) <= bound;
  }
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (opts.second_prime) {
      PrimeField other(other_prime(field.modulus()));
      auto tp2 = instantiate(pf, other);
      auto g2 = objective ? parse_poly<PrimeField>(*objective, tp2.ring) : *tp2.objective;
      auto check = crit_points_direct(tp2.variety, g2, opts.seed);
      timings["second_prime_ms"] = clock.lap_ms();
      if (check.count != main.count || (direct && check.multiplicity != direct->multiplicity)) {
        warnings.push_back("counts differ at prime " + std::to_string(other.modulus()) + ": " +
                           std::to_string(check.count) + " distinct, " + std::to_string(check.multiplicity) +
                           " with multiplicity");
      }
    }
  }
  doc["results"] = results;
  doc["warnings"] = warnings;
  if (opts.timings) doc["timings"] = timings;
  doc["status"] = valid ? "ok" : "invalid";
  return {valid ? kExitOk : kExitValidation, doc};
}

template <class F>
CommandResult check_with_field(const F& field, const ProblemFile& pf, const Json& param_doc,
                               const std::string& param_file, const std::string& problem_file,
                               const FieldSpec& spec, const GlobalOptions& opts) {
  auto tp = instantiate(pf, field);
  // Accept a bare parametrization or a crit document.
  const Json* pj = &param_doc;
  if (param_doc.contains("results")) {
    const Json& r = param_doc.at("results");
    const char* route = r.contains("algorithm1") ? "algorithm1" : "direct";
    if (!r.contains(route)) throw ParseError("crit document without a parametrization", 0);
    pj = &r.at(route).at("parametrization");
  }
  auto p = parametrization_from_json(*pj, tp.ring);
  std::vector<Poly<F>> equations = tp.variety.generators;
  if (tp.objective) equations = critical_check_equations(tp.variety, *tp.objective, opts.seed);
  auto report = check_parametrization(p, equations);
  Json doc = header("check");
  doc["inputs"] = common_inputs(problem_file, spec, opts);
  doc["inputs"]["parametrization"] = param_file;
  doc["results"] = report_json(report);
  doc["results"]["degree"] = p.degree();
  doc["status"] = report.ok() ? "ok" : "invalid";
  return {report.ok() ? kExitOk : kExitValidation, doc};
}

}  // namespace

CommandResult cmd_crit(const std::string& file, const GlobalOptions& opts, const std::optional<std::string>& objective,
                       const std::optional<std::string>& u_crit) {
  return guarded("crit", [&] {
    ProblemFile pf = read_problem_file(file);
    FieldSpec spec = resolve_field(pf, opts);
    return with_field(spec, [&](const auto& field) {
      return crit_with_field(field, pf, spec, file, opts, objective, u_crit);
    });
  });
}

CommandResult cmd_check(const std::string& parametrization_file, const std::string& problem_file,
                        const GlobalOptions& opts) {
  return guarded("check", [&] {
    ProblemFile pf = read_problem_file(problem_file);
    Json param_doc;
    try {
      param_doc = Json::parse(read_text(parametrization_file));
    } catch (const Json::parse_error& e) {
      throw ParseError(parametrization_file + ": " + e.what(), e.byte);
    }
    FieldSpec spec = resolve_field(pf, opts);
    return with_field(spec, [&](const auto& field) {
      return check_with_field(field, pf, param_doc, parametrization_file, problem_file, spec, opts);
    });
  });
}

CommandResult cmd_fiber(const std::string& file, const GlobalOptions& opts) {
  return guarded("fiber", [&] {
    ProblemFile pf = read_problem_file(file);
    FieldSpec spec = resolve_field(pf, opts);
    return with_field(spec, [&](const auto& field) {
      auto tp = instantiate(pf, field);
      Stopwatch clock;
      auto L = build_lifting_fiber(tp.variety, opts.seed);
      double build_ms = clock.lap_ms();
      FiberReport report = validate_fiber(L);
      Json doc = header("fiber");
      doc["inputs"] = common_inputs(file, spec, opts);
      doc["results"] = {{"fiber", fiber_json(L)}, {"valid", report.ok()}, {"failures", report.failures}};
      if (opts.timings) doc["timings"] = {{"fiber_ms", build_ms}, {"validation_ms", clock.lap_ms()}};
      doc["status"] = report.ok() ? "ok" : "invalid";
      return CommandResult{report.ok() ? kExitOk : kExitValidation, doc};
    });
  });
}

CommandResult run_batch(const std::vector<std::string>& files, unsigned jobs,
                        const std::function<CommandResult(const std::string&)>& run) {
  if (files.size() == 1) return run(files.front());
  std::vector<CommandResult> results(files.size());
  int threads = static_cast<int>(std::max(1U, jobs));
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t k = 0; k < files.size(); ++k) results[k] = run(files[k]);
  CommandResult out{kExitOk, {{"format", kFormatVersion}, {"batch", Json::array()}}};
  for (auto& r : results) {
    out.exit_code = std::max(out.exit_code, r.exit_code);
    out.document["batch"].push_back(std::move(r.document));
  }
  return out;
}

}  // namespace polarcrit
