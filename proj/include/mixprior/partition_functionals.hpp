#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mixprior/model_priors.hpp"
#include "mixprior/recursion_core.hpp"

namespace mixprior {

// Per-cluster kernel psi of an additive functional Psi(N_1..N_k) = sum_j psi(N_j).
class Functional {
 public:
  using Kernel = std::function<double(int)>;

  Functional(std::string name, Kernel psi);

  // psi(n) = n ln n; relative entropy is built from it.
  static Functional entropy();
  // psi(n) = 1 if n == 1 else 0.
  static Functional singletons();
  // psi(n) = values[n - 1].
  static Functional from_table(std::string name, std::vector<double> values);

  const std::string& name() const { return name_; }
  double operator()(int n) const { return psi_(n); }
  // Throws InvalidArgument unless psi(n) is finite for n = 1..n_max.
  void validate(int n_max) const;

 private:
  std::string name_;
  Kernel psi_;
  int defined_up_to_ = -1;  // -1 when defined for every n
};

struct FunctionalStats {
  std::optional<int> k;  // empty for K+-weighted statistics
  double mean = 0.0;
  double variance = 0.0;      // raw_variance clamped at 0
  double sd = 0.0;
  double raw_variance = 0.0;  // before clamping; tiny negatives are rounding
  bool truncation_warning = false;
};

// P(N_j = n | N, K+ = k) for n = 1..N-k+1 (entry n - 1).
std::vector<double> marginal_size_pmf(const ModelSpec& spec, int k);
std::vector<double> marginal_size_pmf(const MixtureTables& tables, int k);

// E(psi(N_j) | N, K+ = k), the same for every label j.
double expected_psi(const ModelSpec& spec, int k, const Functional& f);
double expected_psi(const MixtureTables& tables, int k, const Functional& f);

// E(psi(N_1) psi(N_2) | N, K+ = k) for two distinct labels, k >= 2. For k = 2
// this uses N_2 = N - N_1; otherwise the triangular Toeplitz convolution.
double expected_psi_product(const ModelSpec& spec, int k, const Functional& f);
double expected_psi_product(const MixtureTables& tables, int k, const Functional& f);

// Mean k E psi and variance k E psi^2 + k(k-1) E psi psi' - k^2 (E psi)^2 of Psi.
FunctionalStats functional_stats(const ModelSpec& spec, int k, const Functional& f);
FunctionalStats functional_stats(const MixtureTables& tables, int k, const Functional& f);

// Relative entropy -sum_j (N_j/N) ln(N_j/N) / ln k; zero mean and variance for k = 1.
FunctionalStats relative_entropy_stats(const ModelSpec& spec, int k);
FunctionalStats relative_entropy_stats(const MixtureTables& tables, int k);

FunctionalStats singleton_stats(const ModelSpec& spec, int k);

// sum_k stat_k P(K+ = k) for the mean and for the variance, over the k that
// cover 1 - 1e-8 of the K+ pmf. No between-k variance term is added.
FunctionalStats weighted_stats(const ModelSpec& spec, const Functional& f);
FunctionalStats weighted_relative_entropy_stats(const ModelSpec& spec);

namespace detail {

// Convolution route for the product moment, valid for every k >= 2. Exposed
// so the k = 2 shortcut can be checked against it.
double expected_psi_product_convolution(const MixtureTables& tables, int k, const Functional& f);

}  // namespace detail

}  // namespace mixprior
