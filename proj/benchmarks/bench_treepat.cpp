#include <benchmark/benchmark.h>

#include "treepat/bijections.hpp"
#include "treepat/classify.hpp"
#include "treepat/genfunc.hpp"
#include "treepat/tree.hpp"
#include "treepat/wordset.hpp"

using namespace treepat;

static void EnumerateTernary(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long c = 0;
        for_each_tree(3, n, [&](const MAryTree&) { ++c; });
        benchmark::DoNotOptimize(c);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(EnumerateTernary)->Arg(11)->Arg(15)->Arg(17);

static void AvoidCountBrute(benchmark::State& state) {
    MAryTree pattern = wordset_to_tree(parse_word_set("{11}", 3));
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(avoid_count(pattern, n));
    }
}
BENCHMARK(AvoidCountBrute)->Arg(13)->Arg(15)->Arg(17);

static void Containment(benchmark::State& state) {
    WordSet host = parse_word_set("{3231323,11322,3231223112}", 3);
    MAryTree h = wordset_to_tree(host);
    MAryTree p = wordset_to_tree(parse_word_set("{1323,1223}", 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(contains(h, p));
    }
}
BENCHMARK(Containment);

static void SeriesExtraction(benchmark::State& state) {
    PatternSystem sys = build_system(parse_word_set("{11}", 3));
    int terms = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_from_system(sys, terms));
    }
}
BENCHMARK(SeriesExtraction)->Arg(25)->Arg(50)->Arg(100);

static void Elimination(benchmark::State& state) {
    PatternSystem sys = build_system(parse_word_set("{1,21}", 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eliminate(sys));
    }
}
BENCHMARK(Elimination);

static void CutRoundtrip(benchmark::State& state) {
    WordSet w = parse_word_set("{1232311121}", 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cut_inverse(cut_forward(w)));
    }
}
BENCHMARK(CutRoundtrip);

static void ClassifySevenLeaf(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_patterns(3, 7, 19, {SeqMethod::genfunc, false, 1}));
    }
}
BENCHMARK(ClassifySevenLeaf);

BENCHMARK_MAIN();
