#include <benchmark/benchmark.h>

#include <random>

#include "telescope/catalog.hpp"
#include "telescope/properties.hpp"

using namespace telescope;

namespace {

void BM_RisingFactorial(benchmark::State& state) {
    const LaurentPoly a = LaurentPoly::variable(Variable::T) * LaurentPoly::variable(Variable::A);
    for (auto _ : state) benchmark::DoNotOptimize(qrfac(a, state.range(0)));
}
BENCHMARK(BM_RisingFactorial)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_PochhammerTimesQFib(benchmark::State& state) {
    const auto n = state.range(0);
    const LaurentPoly poch = qrfac(LaurentPoly::variable(Variable::T) * LaurentPoly::variable(Variable::A), n);
    SequenceEngine F(builtin_sequence("qfib"));
    const LaurentPoly f = F.term(n + 1);
    for (auto _ : state) benchmark::DoNotOptimize(poch * f);
    state.counters["terms"] = static_cast<double>((poch * f).size());
}
BENCHMARK(BM_PochhammerTimesQFib)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_RationalProduct(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::int64_t> c(-1000, 1000), d(1, 9), e(-4, 4);
    auto random = [&] {
        std::vector<Term> terms;
        for (int i = 0; i < 200; ++i)
            terms.push_back(Term{{static_cast<std::int32_t>(e(rng)), static_cast<std::int32_t>(e(rng)),
                                  static_cast<std::int32_t>(e(rng))},
                                 BigRational(c(rng), d(rng))});
        return LaurentPoly::from_terms(std::move(terms));
    };
    const LaurentPoly a = random();
    const LaurentPoly b = random();
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RationalProduct)->Unit(benchmark::kMillisecond);

void BM_VerifyIdentity(benchmark::State& state, const char* name) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_identity(name, state.range(0)));
}
BENCHMARK_CAPTURE(BM_VerifyIdentity, sury_236, "id_sury_236")->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyIdentity, qfib_sury, "id_qfib_sury")->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyIdentity, q_sury, "id_q_sury")->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyIdentity, q_martinjak, "id_q_martinjak")->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyIdentity, thm1_eq9, "id_thm1_eq9")->Arg(40)->Unit(benchmark::kMillisecond);

void BM_EulerVerify(benchmark::State& state) {
    const auto s = q_pochhammer_scheme();
    for (auto _ : state) benchmark::DoNotOptimize(euler_verify(s, state.range(0)));
}
BENCHMARK(BM_EulerVerify)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_EulerCleared(benchmark::State& state) {
    std::mt19937_64 rng(9);
    const auto s = random_unit_scheme(rng, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(euler_verify_cleared(s, state.range(0)));
}
BENCHMARK(BM_EulerCleared)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
