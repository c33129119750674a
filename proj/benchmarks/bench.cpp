// Micro-benchmarks for the hot paths: polynomial arithmetic, word
// flattening, the Jordan splitting, exponentials, and family membership.

#include <benchmark/benchmark.h>

#include "lfd/automorphism.hpp"
#include "lfd/derivation.hpp"
#include "lfd/expmap.hpp"
#include "lfd/isotropy.hpp"
#include "lfd/linalg.hpp"
#include "lfd/poly2.hpp"
#include "lfd/symtab.hpp"

using namespace lfd;

namespace {

Poly2 dense(int deg, int yw) {
    Poly2 base =
        Poly2::X() + Poly2::Y().scaled(Coeff(yw)) + Poly2::constant(Coeff(1));
    return base.pow(deg);
}

AutWord sample_word() {
    Matrix a(2, 2);
    a.at(0, 0) = Coeff(2);
    a.at(0, 1) = Coeff(1);
    a.at(1, 0) = Coeff(1);
    a.at(1, 1) = Coeff(1);
    return word({elem_y_letter(Poly2::X().pow(3) - Poly2::constant(Coeff(2))),
                 affine_letter(a, Coeff(1), Coeff(-1)),
                 elem_x_letter(Poly2::Y().pow(2) + Poly2::Y())});
}

void BM_PolyMultiply(benchmark::State& state) {
    const Poly2 p = dense(static_cast<int>(state.range(0)), 2);
    const Poly2 q = dense(static_cast<int>(state.range(0)), -3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p * q);
    }
}
BENCHMARK(BM_PolyMultiply)->Arg(4)->Arg(8)->Arg(12);

void BM_PolySubstitute(benchmark::State& state) {
    const Poly2 p = dense(static_cast<int>(state.range(0)), 2);
    const Poly2 vx = Poly2::X() + Poly2::Y().pow(2);
    const Poly2 vy = Poly2::Y() - Poly2::X().pow(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p.substitute(vx, vy));
    }
}
BENCHMARK(BM_PolySubstitute)->Arg(4)->Arg(8);

void BM_Flatten(benchmark::State& state) {
    AutWord w = sample_word();
    for (int i = 1; i < state.range(0); ++i) w = concat(w, sample_word());
    for (auto _ : state) {
        benchmark::DoNotOptimize(flatten(w));
    }
}
BENCHMARK(BM_Flatten)->Arg(1)->Arg(2);

void BM_Conjugate(benchmark::State& state) {
    const AutWord w = sample_word();
    const Derivation d{Poly2::constant(Coeff(0)), dense(3, 1)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(conjugate(w, d));
    }
}
BENCHMARK(BM_Conjugate);

void BM_ClassifyLf(benchmark::State& state) {
    SymbolTable table;
    const Coeff a = Coeff::from_gen(table.add_param("a"));
    const Derivation d{Poly2::X().scaled(a),
                       Poly2::Y().scaled(a * Coeff(2)) + Poly2::X().pow(2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_lf(d, 64));
    }
}
BENCHMARK(BM_ClassifyLf);

void BM_Jordan(benchmark::State& state) {
    SymbolTable table;
    const Coeff a = Coeff::from_gen(table.add_param("a"));
    const Derivation d{Poly2::X().scaled(a),
                       Poly2::Y().scaled(a * Coeff(2)) + Poly2::X().pow(2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(jordan(d, 64));
    }
}
BENCHMARK(BM_Jordan);

void BM_ExpLnd(benchmark::State& state) {
    const Derivation d{Poly2::constant(Coeff(0)),
                       dense(static_cast<int>(state.range(0)), 1)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_lnd(d, 64));
    }
}
BENCHMARK(BM_ExpLnd)->Arg(3)->Arg(6);

void BM_ExpLfd(benchmark::State& state) {
    SymbolTable table;
    const Coeff a = Coeff::from_gen(table.add_param("a"));
    const Derivation d{Poly2::X().scaled(a),
                       Poly2::Y().scaled(a * Coeff(2)) + Poly2::X().pow(2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_lfd(d, 64, table));
    }
}
BENCHMARK(BM_ExpLfd);

void BM_InIsoFamily(benchmark::State& state) {
    const Poly2 f = Poly2::X().pow(2) - Poly2::constant(Coeff(1));
    const Derivation d{Poly2::constant(Coeff(0)), f};
    // A triangular-family member: alpha = 1, beta = 0, gamma = 1, p = X^3.
    const PolyMap m{Poly2::X(), Poly2::Y() + Poly2::X().pow(3)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(in_iso_family(d, m));
    }
}
BENCHMARK(BM_InIsoFamily);

} // namespace

BENCHMARK_MAIN();
