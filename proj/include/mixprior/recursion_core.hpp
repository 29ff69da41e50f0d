#pragma once

#include <memory>
#include <span>
#include <vector>

#include "mixprior/model_priors.hpp"

namespace mixprior {

// Per-cluster-size weights w_n, n = 1..n_max, stored as ln w_n.
//   mixture:           w_n = Gamma(n + gamma) / Gamma(n + 1)
//   dirichlet_process: w_n = 1 / n
class WeightVector {
 public:
  static WeightVector mixture(int n_max, double gamma);
  static WeightVector dirichlet_process(int n_max);

  int n_max() const { return static_cast<int>(log_w_.size()) - 1; }
  bool is_dpm() const { return dpm_; }
  // Dirichlet parameter; meaningless for the Dirichlet process weights.
  double gamma() const { return gamma_; }
  double log_w(int n) const { return log_w_[n]; }

 private:
  WeightVector(std::vector<double> log_w, double gamma, bool dpm)
      : log_w_(std::move(log_w)), gamma_(gamma), dpm_(dpm) {}
  std::vector<double> log_w_;  // index 0 unused
  double gamma_;
  bool dpm_;
};

// ln C_{m,k} = ln sum over compositions (N_1..N_k) of m of prod_j w_{N_j},
// for m <= N and k <= k_max. Column k holds (C_{N,k}, C_{N-1,k}, ..., C_{k,k}).
// Immutable once built.
class CTable {
 public:
  int n() const { return weights_.n_max(); }
  int k_max() const { return static_cast<int>(columns_.size()) - 1; }
  const WeightVector& weights() const { return weights_; }

  // ln C_{m,k} for 0 <= m <= N and 0 <= k <= k_max. C_{0,0} = 1, C_{m,0} = 0
  // for m > 0, and C_{m,k} = 0 for m < k.
  double log_c(int m, int k) const;

  // The stored vector c_k = (ln C_{N,k}, ..., ln C_{k,k}), 1 <= k <= k_max.
  std::span<const double> column(int k) const { return columns_.at(k); }

 private:
  friend CTable build_c_table(const WeightVector& weights, int k_max);
  explicit CTable(WeightVector w) : weights_(std::move(w)) {}
  WeightVector weights_;
  std::vector<std::vector<double>> columns_;  // columns_[0] empty
};

// Runs the triangular Toeplitz recursion c_k = (0 | W_k) c_{k-1} in log space.
// Throws InvalidArgument unless 1 <= k_max <= N.
CTable build_c_table(const WeightVector& weights, int k_max);
CTable build_c_table(int n, double gamma, int k_max);
CTable build_c_table_dpm(int n, int k_max);

// ln V^{K,gamma}_{N,k} = ln[Gamma(gamma K) K! / (Gamma(gamma K + N) (K - k)!)];
// -inf when k > K.
double log_v(int n, int k, int K, double gamma);

// ln[p(K) V^{K,gamma}_{N,k} / Gamma(gamma)^k], evaluated through
// gamma^k / Gamma(1 + gamma)^k so tiny gamma stays accurate.
double log_weight_tilde(const ComponentCountPrior& prior, int n, int k, int K, double gamma);

// Marginal V^gamma_{n,k} = sum_K p(K) V^{K,gamma}_{n,k} for a static sequence,
// filled in by the three-term recursion
//   V_{n+1,k+1} = V_{n,k} / gamma - (n / gamma + k) V_{n+1,k}
// from the k = 0 seed. Each step subtracts nearly equal terms and about N
// decimal digits are lost by k ~ N, so the recursion runs in MPFR at
// 2N + 40 digits. It is a cross-check for the direct sum, not a production
// path.
class StaticVTable {
 public:
  int n_max() const { return n_max_; }
  int k_max() const { return k_max_; }
  int working_digits() const { return digits_; }
  // V_{n,k} for 0 <= k <= min(n, k_max), rounded to long double. Entries with
  // k beyond the support of p(K) are cancellation residue and may be <= 0.
  long double value(int n, int k) const;
  // ln V_{n,k}; NaN when the recursion produced a non-positive value.
  double log_value(int n, int k) const;

 private:
  friend StaticVTable static_v_table(const ModelSpec& spec, int k_max);
  std::size_t index(int n, int k) const;
  int n_max_ = 0;
  int k_max_ = 0;
  int digits_ = 0;
  std::vector<double> log_abs_;  // row-major (n, k)
  std::vector<signed char> sign_;
};

// Throws InvalidArgument unless the spec is a static MFM.
StaticVTable static_v_table(const ModelSpec& spec, int k_max);

// Direct truncated summation of ln V^gamma_{n,k} for a static MFM.
double log_v_marginal_direct(const ModelSpec& spec, int n, int k);

// One term K of the mixture over the number of components.
struct ComponentTerm {
  int K = 0;
  double gamma = 0.0;
  double log_prior = 0.0;
  std::shared_ptr<const CTable> table;
};

// The CTables a model needs for K+ up to `depth`: one shared table for DPM and
// static MFMs, one per K for dynamic MFMs (built in parallel).
class MixtureTables {
 public:
  MixtureTables(const ModelSpec& spec, int depth);

  const ModelSpec& spec() const { return spec_; }
  int depth() const { return depth_; }
  // Table whose C values are K-independent (DPM, static MFM).
  const CTable& shared_table() const;
  // MFM terms in ascending K, restricted to the prior support up to k_max.
  std::span<const ComponentTerm> components() const { return components_; }
  // Truncation of the sum over K; {0, 1, false} for DPMs.
  const TruncationBound& truncation() const { return bound_; }
  bool below_warn() const {
    return !spec_.is_dpm() && bound_.covered_mass < spec_.trunc().min_covered_mass_warn;
  }

 private:
  ModelSpec spec_;
  int depth_;
  TruncationBound bound_{0, 1.0, false};
  std::shared_ptr<const CTable> shared_;
  std::vector<ComponentTerm> components_;
};

struct WeightTerm {
  int K = 0;
  double log_w_tilde = 0.0;
};

// Unnormalised mixing weights w~^{K}_{N,k} for K >= k together with
// ln sum_K w~ C^K_{N,k}; normalised weights are w~ / normalizer.
struct MixingWeights {
  int k = 0;
  std::vector<WeightTerm> terms;
  double log_normalizer = 0.0;
  double covered_prior_mass = 1.0;
  bool below_warn = false;

  double log_weight(std::size_t i) const { return terms[i].log_w_tilde - log_normalizer; }
};

// Throws InvalidArgument for DPMs (their weight is the single value 1) and
// unless 1 <= k <= depth.
MixingWeights mixing_weights(const MixtureTables& tables, int k);
MixingWeights mixing_weights(const ModelSpec& spec, int k);

// Representation of the conditional law of labelled sizes given K+ = k:
//   p(N_1..N_k | K+ = k) = sum_t exp(log_omega_t) prod_j w^t_{N_j}.
// DPMs and static MFMs give the single term 1 / C_{N,k}, which never touches
// alpha or p(K).
struct ConditionalTerm {
  double log_omega = 0.0;
  const CTable* table = nullptr;
};

std::vector<ConditionalTerm> conditional_terms(const MixtureTables& tables, int k);

}  // namespace mixprior
