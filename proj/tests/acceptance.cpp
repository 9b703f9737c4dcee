// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "polarcrit/commands.hpp"
#include "support.hpp"

using namespace polarcrit;
using namespace polarcrit::testing;

namespace {

using FP = PrimeField;
using Clock = std::chrono::steady_clock;

std::string data(const std::string& name) { return std::string(POLARCRIT_DATA_DIR) + "/" + name; }

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool in_budget = secs <= budget_s;
  bool pass = out.ok && in_budget;
  if (!pass) ++failures;
  std::printf("%s %d %s (%.2fs, budget %.0fs)%s%s\n", pass ? "PASS" : "FAIL", id, title.c_str(), secs, budget_s,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  if (!in_budget) std::printf("     over budget\n");
  std::fflush(stdout);
}

Poly<FP> weighted_cubic(const RingPtr<FP>& R) {
  Poly<FP> g(R);
  for (std::size_t i = 0; i < R->nvars(); ++i) {
    g = g + Poly<FP>::variable(R, i).pow(3).scaled(R->field().from_int(static_cast<long>(i + 1)));
  }
  return g;
}

mpz_class closed_form(const DeltaVector& delta, unsigned long D, std::size_t i) {
  if (D == 1) return delta.values[i];
  mpz_class sum = 0, w = 1;
  for (std::size_t j = i; j < delta.values.size(); ++j) {
    sum += w * mpz_class(std::to_string(delta.values[j]));
    w *= D - 1;
  }
  return sum;
}

template <class T>
std::string str(const T& x) {
  return std::to_string(x);
}

// Each entry changes one field of a fiber.
std::vector<std::pair<std::string, std::function<void(LiftingFiber<FP>&)>>> tamperings() {
  using L = LiftingFiber<FP>;
  return {
      {"v", [](L& f) { f.v[0] = f.v[0] + UPoly<FP>(f.ring->field(), {f.ring->field().one()}); }},
      {"Q", [](L& f) { f.Q = f.Q + UPoly<FP>(f.ring->field(), {f.ring->field().one()}); }},
      {"z", [](L& f) { f.z[0] = f.ring->field().add(f.z[0], f.ring->field().one()); }},
      {"u", [](L& f) { f.u[0] = f.ring->field().add(f.u[0], f.ring->field().one()); }},
      {"M",
       [](L& f) {
         for (std::size_t j = 0; j < f.M.cols(); ++j) f.M(1, j) = f.M(0, j);
       }},
      {"lifting", [](L& f) { f.lifting[0] = f.lifting[0] + Poly<FP>::constant(f.ring, f.ring->field().one()); }},
      {"equations",
       [](L& f) { f.equations[0] = f.equations[0] + Poly<FP>::constant(f.ring, f.ring->field().one()); }},
      {"dim", [](L& f) { f.dim += 1; }},
  };
}

}  // namespace

int main() {
  criterion(1, "bound for the rank-one 3x3 variety: 241 and naive 2608", 1, [] {
    BoundArgs args;
    args.delta = DeltaVector{{1, 4, 10, 12, 6}};
    args.degree = 3;
    args.nvars = 8;
    args.naive_degrees = {2, 2, 2, 2};
    auto r = cmd_bound(args);
    const auto& res = r.document["results"];
    std::string b = res["bounds"][0]["bound"], p = res["bounds"][0]["bidegree_pipeline"], n = res["naive"];
    return Outcome{r.exit_code == kExitOk && b == "241" && p == "241" && n == "2608",
                   "bound " + b + ", pipeline " + p + ", naive " + n};
  });

  criterion(2, "polar degrees of the rank-one 3x3 variety, two seeds", 300, [] {
    Json expect = Json::array({1, 4, 10, 12, 6});
    std::string detail;
    bool ok = true;
    for (std::uint64_t seed : {1u, 2u}) {
      GlobalOptions opts;
      opts.timings = false;
      opts.seed = seed;
      auto r = cmd_delta(data("determinantal.txt"), opts);
      Json got = r.exit_code == kExitOk ? r.document["results"]["delta"] : Json();
      ok = ok && got == expect;
      detail += (detail.empty() ? "" : ", ") + ("seed " + str(seed) + " -> " + got.dump());
    }
    return Outcome{ok, detail};
  });

  criterion(3, "circle end to end", 1, [] {
    auto R = ring_p({"x", "y"});
    auto v = circle(R);
    auto g = P(R, "x^3+2*y^3");
    auto a1 = run_algorithm1(v, g, 1);
    auto dr = crit_points_direct(v, g, 1);
    auto eqs = crit_ideal(v, g, empty_directions(R->field(), 2), 0);
    auto bound = theorem1_bound(DeltaVector{{2, 2}}, 3, 0);
    auto rep = verify_bound(v, g, 1);
    bool inv = check_parametrization(a1.parametrization, eqs).ok() && check_parametrization(dr.parametrization, eqs).ok();

    // Same over the rationals on the direct route.
    auto RQ = ring_q({"x", "y"});
    auto gq = P(RQ, "x^3+2*y^3");
    auto drq = crit_points_direct(circle(RQ), gq, 1);
    auto eqsq = crit_ideal(circle(RQ), gq, empty_directions(RQ->field(), 2), 0);
    bool invq = check_parametrization(drq.parametrization, eqsq).ok();

    bool ok = a1.count == 6 && dr.count == 6 && drq.count == 6 && bound == 6 && rep.tight && inv && invq;
    return Outcome{ok, "algorithm1 " + str(a1.count) + ", direct " + str(dr.count) + ", over Q " + str(drq.count) +
                           ", bound " + bound.get_str() + (rep.tight ? " tight" : " not tight") +
                           (inv && invq ? ", invariants hold" : ", invariants violated")};
  });

  criterion(4, "weighted cubic on the rank-one 3x3 variety: quotient dimension 241", 1800, [] {
    auto pf = read_problem_file(data("determinantal.txt"));
    auto tp = instantiate<FP>(pf, FP(kDefaultPrime));
    auto g = weighted_cubic(tp.variety.ring());
    auto r = crit_points_direct(tp.variety, g, 1);
    return Outcome{r.multiplicity == 241,
                   "quotient dimension " + str(r.multiplicity) + ", distinct points " + str(r.count)};
  });

  criterion(5, "bidegree pipeline equals the closed form on 1000 cases", 10, [] {
    Rng rng(20240601);
    int bad = 0, d1 = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      std::size_t n = static_cast<std::size_t>(draw_int(rng, 1, 12));
      std::size_t d = static_cast<std::size_t>(draw_int(rng, 0, static_cast<long>(n) - 1));
      std::size_t i = static_cast<std::size_t>(draw_int(rng, 0, static_cast<long>(d)));
      unsigned long D = static_cast<unsigned long>(draw_int(rng, 1, 7));
      DeltaVector delta;
      for (std::size_t k = 0; k <= d; ++k) delta.values.push_back(static_cast<std::uint64_t>(draw_int(rng, 1, 100000)));
      auto t1 = theorem1_bound(delta, D, i);
      auto pipe = projection_degree(bidegree_product(conormal_bidegree(delta, n), s_variety_bidegree(n, i + 1, D)), n, i);
      bool ok = pipe == t1 && t1 == closed_form(delta, D, i);
      if (D == 1) {
        ++d1;
        ok = ok && pipe == delta.delta(i + 1);
      }
      bad += !ok;
    }
    return Outcome{bad == 0, str(bad) + " mismatches, " + str(d1) + " cases with D = 1"};
  });

  std::vector<RandomInstance> instances;
  for (std::uint64_t k = 0; k < 100; ++k) instances.push_back(random_instance(100000 + k, static_cast<int>(k % 3)));

  criterion(6, "polar-variety and direct routes agree on 100 instances", 300, [&] {
    int compared = 0, skipped = 0, bad = 0;
    for (std::size_t k = 0; k < instances.size(); ++k) {
      const auto& inst = instances[k];
      std::uint64_t seed = k + 1;
      if (!check_hypotheses(inst.variety, inst.objective, seed).all_pass()) {
        ++skipped;
        continue;
      }
      auto a1 = run_algorithm1(inst.variety, inst.objective, seed);
      auto dr = crit_points_direct(inst.variety, inst.objective, seed);
      bool same = a1.count == dr.count &&
                  change_primitive_element(a1.parametrization, dr.parametrization.lambda).q == dr.parametrization.q;
      bad += !same;
      ++compared;
    }
    return Outcome{bad == 0 && compared > 0, str(compared) + " compared, " + str(bad) + " disagreements, " +
                                                 str(skipped) + " failing the hypotheses"};
  });

  criterion(7, "critical counts never exceed the bound", 600, [&] {
    auto all = instances;
    for (std::uint64_t k = 0; k < 50; ++k) all.push_back(random_hypersurface(200000 + k));
    int checked = 0, violations = 0;
    for (std::size_t k = 0; k < all.size(); ++k) {
      const auto& inst = all[k];
      std::uint64_t seed = k + 1;
      auto h = check_hypotheses(inst.variety, inst.objective, seed);
      if (!h.all_pass()) continue;
      auto delta = delta_of_variety(inst.variety, seed);
      auto bound = theorem1_bound(delta, static_cast<unsigned long>(inst.objective.total_degree()), 0);
      violations += mpz_class(static_cast<unsigned long>(h.multiplicity)) > bound;
      ++checked;
    }
    return Outcome{violations == 0 && checked > 0, str(checked) + " checked, " + str(violations) + " violations"};
  });

  criterion(8, "lifting fibers validate and tampering is detected", 300, [] {
    int fibers = 0, invalid = 0, undetected = 0;
    std::string missed;
    auto edits = tamperings();
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      auto inst = random_instance(300000 + seed, 0);
      auto L = build_lifting_fiber(inst.variety, seed);
      auto E = extend_fiber(L, inst.objective);
      invalid += !validate_fiber(L).ok();
      invalid += !validate_fiber(E).ok();
      ++fibers;
      for (const auto* base : {&L, &E}) {
        for (const auto& [name, edit] : edits) {
          auto t = *base;
          edit(t);
          if (validate_fiber(t).ok()) {
            ++undetected;
            missed += " " + name;
          }
        }
      }
    }
    return Outcome{invalid == 0 && undetected == 0, str(fibers) + " curves, " + str(invalid) +
                                                        " invalid fibers, " + str(undetected) +
                                                        " undetected tamperings" + missed};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "SOME FAIL", failures);
  return failures == 0 ? 0 : 1;
}
