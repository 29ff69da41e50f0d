#pragma once

#include <span>
#include <vector>

#include "mixprior/model_priors.hpp"
#include "mixprior/recursion_core.hpp"

namespace mixprior {

// Cluster sizes (N_1, ..., N_k) with labels attached, all >= 1.
class LabelledSizes {
 public:
  explicit LabelledSizes(std::vector<int> sizes);
  // Also checks that the sizes add up to n.
  LabelledSizes(std::vector<int> sizes, int n);

  int n() const { return n_; }
  int k() const { return static_cast<int>(sizes_.size()); }
  std::span<const int> sizes() const { return sizes_; }

 private:
  std::vector<int> sizes_;
  int n_ = 0;
};

// EPPFs give the probability of one set partition with these block sizes.
// Every evaluator sums over the sizes in sorted order, so permuting the labels
// never changes the result.

// Ewens: alpha^k Gamma(alpha) / Gamma(alpha + N) prod_j Gamma(N_j).
double log_eppf_dpm(const LabelledSizes& sizes, double alpha);

// Conditional on K components: V^{K,gamma}_{N,k} / Gamma(gamma)^k prod_j Gamma(N_j + gamma);
// -inf when k > K.
double log_eppf_given_k(const LabelledSizes& sizes, int K, double gamma);

// Mixture over K of the conditional EPPF, truncated as the spec prescribes.
// Throws InvalidArgument for DPM specs or when sizes.n() != spec.n().
double log_eppf_mfm(const LabelledSizes& sizes, const ModelSpec& spec);

// Dispatches to the DPM or MFM evaluator.
double log_eppf(const LabelledSizes& sizes, const ModelSpec& spec);

// p(N_1, ..., N_k | N, K+ = k): alpha-free for DPMs, p(K)-free for static
// MFMs, a mixture over K for dynamic MFMs.
double conditional_sizes_prior(const LabelledSizes& sizes, const ModelSpec& spec);
// Same, reusing tables built with depth >= sizes.k().
double conditional_sizes_prior(const LabelledSizes& sizes, const MixtureTables& tables);

}  // namespace mixprior
