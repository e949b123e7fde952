#include <benchmark/benchmark.h>

#include <random>

#include "nowcast/eval/loocv.hpp"
#include "nowcast/eval/metrics.hpp"

namespace {

using namespace nowcast;

gpr::TrainingSet noisy_line(std::size_t n) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> z;
  gpr::TrainingSet t{gpr::InputMatrix(static_cast<Eigen::Index>(n), 1),
                     Eigen::VectorXd(static_cast<Eigen::Index>(n))};
  for (Eigen::Index i = 0; i < t.inputs.rows(); ++i) {
    t.inputs(i, 0) = z(rng);
    t.targets(i) = 7.7 + 1.5 * t.inputs(i, 0) + z(rng);
  }
  return t;
}

void BM_Loocv(benchmark::State& state) {
  const auto training = noisy_line(static_cast<std::size_t>(state.range(0)));
  const auto kernel = gpr::Kernel::isotropic(1.0, 1.0, 1, 1e-6);
  const auto threads = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eval::loocv_predictions(training, gpr::BasisDegree::Constant, kernel, threads));
  }
}
BENCHMARK(BM_Loocv)->Args({100, 1})->Args({382, 1})->Args({382, 4})->UseRealTime();

void BM_Metrics(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> z;
  std::vector<eval::PredictionPair> pairs(static_cast<std::size_t>(state.range(0)));
  for (auto& p : pairs) p = {z(rng), z(rng)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval::correlation_rate(pairs));
    benchmark::DoNotOptimize(eval::rmse(pairs));
    benchmark::DoNotOptimize(eval::rae(pairs));
  }
}
BENCHMARK(BM_Metrics)->Arg(382)->Arg(10000);

}  // namespace
