#include <benchmark/benchmark.h>

#include "dihext/category_o.hpp"
#include "dihext/dihedral.hpp"
#include "dihext/hecke.hpp"

using namespace dihext;

namespace {

// Both Ext routes over all 4m^2 ordered pairs; the acceptance sweep in one
// iteration.
void BM_ExtSweep(benchmark::State& state) {
    GroupParams g(static_cast<int>(state.range(0)));
    const auto all = elements(g);
    for (auto _ : state) {
        for (const auto& x : all)
            for (const auto& y : all) {
                auto lhs = ext_via_resolution(x, y);
                auto rhs = ext_closed_form(x, y);
                benchmark::DoNotOptimize(lhs);
                benchmark::DoNotOptimize(rhs);
            }
    }
}

void BM_RPolynomialAll(benchmark::State& state) {
    GroupParams g(static_cast<int>(state.range(0)));
    const auto all = elements(g);
    for (auto _ : state) {
        for (const auto& x : all)
            for (const auto& y : all) {
                auto r = r_polynomial(x, y);
                benchmark::DoNotOptimize(r);
            }
    }
}

void BM_KLBasisBarCheck(benchmark::State& state) {
    GroupParams g(static_cast<int>(state.range(0)));
    const auto all = elements(g);
    for (auto _ : state) {
        for (const auto& w : all) {
            auto b = kl_basis(w);
            auto barred = bar_hecke(b);
            benchmark::DoNotOptimize(barred);
        }
    }
}

}  // namespace

BENCHMARK(BM_ExtSweep)->Arg(2)->Arg(6)->Arg(10);
BENCHMARK(BM_RPolynomialAll)->Arg(4)->Arg(8);
BENCHMARK(BM_KLBasisBarCheck)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
