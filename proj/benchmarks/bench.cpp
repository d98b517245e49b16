#include <benchmark/benchmark.h>

#include "aobc/schurweyl.hpp"
#include "aobc/walled.hpp"

using namespace aobc;

static void BM_NormalizeBraid(benchmark::State& state) {
    const Expr e = parse_expr("(compose (tensor cross id1) (tensor id1 cross) (tensor cross id1) (tensor x c id1))");
    for (auto _ : state) benchmark::DoNotOptimize(normalize(e));
}
BENCHMARK(BM_NormalizeBraid);

static void BM_DotThroughCrossings(benchmark::State& state) {
    // x on the left strand pushed through k crossings
    const unsigned k = static_cast<unsigned>(state.range(0));
    Expr e = parse_expr("(tensor x id1)");
    for (unsigned i = 0; i < k; ++i) e = compose(parse_expr("cross"), e);
    for (auto _ : state) benchmark::DoNotOptimize(normalize(e));
}
BENCHMARK(BM_DotThroughCrossings)->Arg(1)->Arg(3)->Arg(5);

static void BM_HomBasis(benchmark::State& state) {
    const Word w = word_power(Ori::Up, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hom_basis(w, w, 2));
}
BENCHMARK(BM_HomBasis)->Arg(1)->Arg(2)->Arg(3);

static void BM_CyclotomicProduct(benchmark::State& state) {
    const auto cyc = Cyclotomic::make(parse_tpoly("t^2-4/9"), std::nullopt);
    const Word w = word_power(Ori::Up, 2);
    const auto basis = hom_basis(w, w, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& a = basis[i % basis.size()];
        const auto& b = basis[(7 * i + 3) % basis.size()];
        benchmark::DoNotOptimize(cyclotomic_reduce(compose(Morphism::basis(a), Morphism::basis(b)), cyc));
        ++i;
    }
}
BENCHMARK(BM_CyclotomicProduct);

static void BM_WalledPresentation(benchmark::State& state) {
    PresentationOptions opt;
    opt.kmax = 1;
    for (auto _ : state) benchmark::DoNotOptimize(verify_presentation(1, 1, opt));
}
BENCHMARK(BM_WalledPresentation)->Unit(benchmark::kMillisecond);

static void BM_FunctorMatrix(benchmark::State& state) {
    Psi psi(2, std::make_shared<NaturalModule>(2));
    const Expr e = parse_expr("(compose (tensor x id1) cross (tensor id1 x))");
    for (auto _ : state) benchmark::DoNotOptimize(psi.matrix(e));
}
BENCHMARK(BM_FunctorMatrix);

static void BM_SergeevRecursion(benchmark::State& state) {
    const std::vector<GR> lam{GR(mpq_class(1, 3)), GR(-2), GR(mpq_class(5, 2)), GR(7)};
    const unsigned r = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sergeev_eigenvalue(r, lam));
}
BENCHMARK(BM_SergeevRecursion)->Arg(1)->Arg(2)->Arg(3);

static void BM_CoefficientMatrix(benchmark::State& state) {
    const unsigned r = static_cast<unsigned>(state.range(0));
    const Weight w = build_weight(0, 1, 0, {2 * r}, {GR(mpq_class(1, 3))});
    for (auto _ : state) benchmark::DoNotOptimize(coefficient_matrix(r, 2, w, r + 1));
}
BENCHMARK(BM_CoefficientMatrix)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
