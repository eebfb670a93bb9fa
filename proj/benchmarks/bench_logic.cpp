#include <benchmark/benchmark.h>

#include <string>

#include "zetalogic/formula.hpp"
#include "zetalogic/logic.hpp"

namespace {

std::string chain_formula(int atoms) {
    std::string text = "a0";
    for (int i = 1; i < atoms; ++i) {
        text += (i % 2 == 0 ? " & !a" : " | a") + std::to_string(i);
    }
    return text;
}

void ParseRender(benchmark::State& state) {
    const std::string text = chain_formula(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const zetalogic::Formula f = zetalogic::parse_formula(text);
        benchmark::DoNotOptimize(zetalogic::render(f));
    }
}
BENCHMARK(ParseRender)->Arg(4)->Arg(16)->Arg(64);

void TruthTable3V(benchmark::State& state) {
    const zetalogic::Formula f =
        zetalogic::parse_formula(chain_formula(static_cast<int>(state.range(0))));
    const zetalogic::LogicSystem& logic = *zetalogic::find_logic("lp");
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetalogic::truth_table(f, logic));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(TruthTable3V)->DenseRange(4, 10, 2);

void EntailsExplosion(benchmark::State& state) {
    const std::vector<zetalogic::Formula> premises = {
        zetalogic::parse_formula("p"), zetalogic::parse_formula("!p")};
    const zetalogic::Formula conclusion =
        zetalogic::parse_formula(chain_formula(static_cast<int>(state.range(0))));
    const zetalogic::LogicSystem& logic = *zetalogic::find_logic("k3");
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetalogic::entails(premises, conclusion, logic));
    }
}
BENCHMARK(EntailsExplosion)->Arg(4)->Arg(8);

void ClassifyLaws(benchmark::State& state) {
    const zetalogic::LogicSystem& logic = *zetalogic::find_logic("bochvar");
    for (auto _ : state) {
        benchmark::DoNotOptimize(zetalogic::classify_laws(logic));
    }
}
BENCHMARK(ClassifyLaws);

}  // namespace
