// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "polarcrit/groebner.hpp"
#include "polarcrit/minors.hpp"
#include "polarcrit/random.hpp"

using namespace polarcrit;

namespace {

using FP = PrimeField;

RingPtr<FP> ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(FP(kDefaultPrime), names);
}

Poly<FP> random_poly(Rng& rng, const RingPtr<FP>& R, unsigned degree) {
  Poly<FP> p(R);
  for (int k = 0; k < 6; ++k) {
    Poly<FP> t = Poly<FP>::constant(R, R->field().from_int(draw_nonzero(rng, 50)));
    for (unsigned e = 0; e < degree; ++e) {
      if (draw_int(rng, 0, 1)) t = t * Poly<FP>::variable(R, static_cast<std::size_t>(draw_int(rng, 0, static_cast<long>(R->nvars()) - 1)));
    }
    p = p + t;
  }
  return p;
}

// 4 x 6 matrix of random quadrics; all maximal minors.
PolyMatrix<FP> minors_input() {
  auto R = ring(6);
  Rng rng(7);
  std::vector<Poly<FP>> rows;
  for (int i = 0; i < 4; ++i) rows.push_back(random_poly(rng, R, 3));
  return jacobian(rows);
}

template <bool Parallel>
void BM_minors(benchmark::State& state) {
  auto m = minors_input();
  for (auto _ : state) {
    auto out = Parallel ? minors(m, 4) : minors_serial(m, 4);
    benchmark::DoNotOptimize(out);
  }
}

// Dense system in three variables; multiplication by a linear form.
struct MulInput {
  GroebnerBasis<FP> gb;
  Poly<FP> form;
};

MulInput mul_input() {
  auto R = ring(3);
  Rng rng(11);
  std::vector<Poly<FP>> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(random_poly(rng, R, 3) + Poly<FP>::variable(R, i).pow(3));
  auto form = Poly<FP>::variable(R, 0) + Poly<FP>::variable(R, 1).scaled(R->field().from_int(2)) +
              Poly<FP>::variable(R, 2).scaled(R->field().from_int(3));
  return {buchberger(gens), form};
}

template <bool Parallel>
void BM_multiplication_matrix(benchmark::State& state) {
  auto in = mul_input();
  for (auto _ : state) {
    auto m = Parallel ? multiplication_matrix(in.gb, in.form) : multiplication_matrix_serial(in.gb, in.form);
    benchmark::DoNotOptimize(m);
  }
}

}  // namespace

BENCHMARK(BM_minors<false>)->Name("minors/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_minors<true>)->Name("minors/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiplication_matrix<false>)->Name("multiplication_matrix/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiplication_matrix<true>)->Name("multiplication_matrix/parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
