#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mixprior/model_priors.hpp"
#include "mixprior/partition_functionals.hpp"

namespace mixprior {

// Random source for the simulator. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; all conversions to uniforms, normals
// and gamma variates are done here rather than through <random>
// distributions, whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on the open interval (0, 1) with 53 random bits.
  double uniform();
  // Standard normal by Box-Muller (one draw per call).
  double normal();
  // ln X for X ~ Gamma(shape, 1). Marsaglia-Tsang for shape >= 1; for
  // shape < 1 the boost X = Y U^(1/shape), Y ~ Gamma(shape + 1), is applied in
  // log space so shapes far below 1 do not underflow.
  double log_gamma_variate(double shape);

  // Stream seed for sub-stream `stream` of `master`: two rounds of splitmix64.
  static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

// One simulated partition. Labels are renumbered 0..k_plus-1 in order of first
// appearance; sizes[j] is the size of block j.
struct PartitionSample {
  std::vector<int> assignments;
  int k_plus = 0;
  std::vector<int> sizes;
  int components = 0;  // K drawn from p(K); 0 for DPMs
};

// MFMs: K ~ p(K), eta ~ Dirichlet_K(gamma_K), S_i ~ Categorical(eta).
// DPMs: Chinese restaurant process with concentration alpha.
PartitionSample simulate_partition(const ModelSpec& spec, Rng& rng);
PartitionSample simulate_partition(const ModelSpec& spec, std::uint64_t rng_seed);

// Draws are split into blocks of kSimulationBlock; block b uses
// Rng(derive_seed(seed, b)). Results do not depend on the worker count.
inline constexpr std::int64_t kSimulationBlock = 1024;

struct EmpiricalPmf {
  int n = 0;
  std::int64_t draws = 0;
  std::vector<std::int64_t> counts;  // counts[k - 1]
  std::vector<double> freq;          // counts / draws
  std::vector<double> se;            // sqrt(freq (1 - freq) / draws)

  double prob(int k) const { return (k >= 1 && k <= n) ? freq[k - 1] : 0.0; }
};

// n_draws partitions in stream order (same streams as the estimators below).
std::vector<PartitionSample> simulate_partitions(const ModelSpec& spec, std::int64_t n_draws,
                                                 std::uint64_t rng_seed);

EmpiricalPmf estimate_kplus_pmf(const ModelSpec& spec, std::int64_t n_draws,
                                std::uint64_t rng_seed);

struct ConditionalEstimate {
  double mean = 0.0;
  double variance = 0.0;  // sample variance of the statistic
  double se = 0.0;        // standard error of the mean
  std::int64_t accepted = 0;
  std::int64_t drawn = 0;
};

inline constexpr std::int64_t kDefaultDrawBudget = 100'000'000;

// Rejection sampling of partitions with K+ = k. Throws BudgetExceeded when
// draw_budget partitions yield fewer than n_accepted acceptances.
ConditionalEstimate estimate_conditional_functional(const ModelSpec& spec, int k,
                                                    const Functional& f,
                                                    std::int64_t n_accepted,
                                                    std::uint64_t rng_seed,
                                                    std::int64_t draw_budget = kDefaultDrawBudget);

// Same for the relative entropy (0 for k = 1).
ConditionalEstimate estimate_conditional_relative_entropy(
    const ModelSpec& spec, int k, std::int64_t n_accepted, std::uint64_t rng_seed,
    std::int64_t draw_budget = kDefaultDrawBudget);

// Unconditional relative entropy: its mean, its total variance (including the
// spread of the conditional means across K+), and the K+-weighted average of
// the conditional variances.
struct RelativeEntropyEstimate {
  double mean = 0.0;
  double total_variance = 0.0;
  double weighted_conditional_variance = 0.0;
  std::int64_t draws = 0;
};

RelativeEntropyEstimate estimate_relative_entropy(const ModelSpec& spec, std::int64_t n_draws,
                                                  std::uint64_t rng_seed);

// Relative entropy of one partition, 0 when there is a single block.
double relative_entropy(const std::vector<int>& sizes, int n);

}  // namespace mixprior
