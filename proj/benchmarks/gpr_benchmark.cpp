#include <benchmark/benchmark.h>

#include <random>

#include "nowcast/gpr/hyperparameters.hpp"
#include "nowcast/gpr/model.hpp"

namespace {

using namespace nowcast::gpr;

TrainingSet make_training(std::size_t n, std::size_t d) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  TrainingSet t{InputMatrix(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d)),
                Eigen::VectorXd(static_cast<Eigen::Index>(n))};
  for (Eigen::Index i = 0; i < t.inputs.rows(); ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < t.inputs.cols(); ++j) {
      t.inputs(i, j) = u(rng);
      sum += t.inputs(i, j);
    }
    t.targets(i) = std::sin(sum) + 0.1 * sum;
  }
  return t;
}

void BM_Fit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto training = make_training(n, 1);
  const BasisExpansion basis(BasisDegree::Constant, 1);
  const auto kernel = Kernel::isotropic(1.0, 1.0, 1, 1e-6);
  for (auto _ : state) benchmark::DoNotOptimize(fit(training, basis, kernel));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fit)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

void BM_Predict(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto training = make_training(n, 1);
  const BasisExpansion basis(BasisDegree::Linear, 1);
  const auto model = fit(training, basis, Kernel::isotropic(1.0, 1.0, 1, 1e-6));
  const std::vector<double> x{4.2};
  for (auto _ : state) benchmark::DoNotOptimize(model.predict(x));
}
BENCHMARK(BM_Predict)->RangeMultiplier(4)->Range(32, 512);

void BM_HyperparameterSearch(benchmark::State& state) {
  const auto training = make_training(static_cast<std::size_t>(state.range(0)), 1);
  const BasisExpansion basis(BasisDegree::Constant, 1);
  SearchConfig search;
  search.threads = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fit_hyperparameters(training, basis, search));
}
BENCHMARK(BM_HyperparameterSearch)->Args({100, 1})->Args({400, 1})->Args({400, 4})->UseRealTime();

}  // namespace
