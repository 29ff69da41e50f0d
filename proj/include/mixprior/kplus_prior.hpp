#pragma once

#include <vector>

#include "mixprior/model_priors.hpp"

namespace mixprior {

// P(K+ = k | N, gamma) for k = 1..N. The raw probabilities are not
// renormalised; the mass lost to truncating the sum over K shows up as
// covered_mass < 1.
struct KPlusPmf {
  int n = 0;
  std::vector<double> probs;  // probs[k - 1] = P(K+ = k)
  double covered_mass = 1.0;  // sum of probs
  int k_max = 0;              // largest K in the truncated sum; 0 for DPMs
  double prior_covered_mass = 1.0;
  bool truncation_warning = false;

  double prob(int k) const { return (k >= 1 && k <= n) ? probs[k - 1] : 0.0; }
};

// Dispatches on the model class. Static MFMs reuse a single CTable, dynamic
// MFMs build one per K in parallel and reduce in ascending K.
KPlusPmf kplus_pmf(const ModelSpec& spec);

// Ewens route: P(K+ = k) = N!/k! alpha^k Gamma(alpha)/Gamma(alpha + N) C_{N,k}
// with w_n = 1/n.
KPlusPmf kplus_pmf_dpm(int n, double alpha);

struct KPlusSummary {
  double mean = 0.0;
  double sd = 0.0;
  double quantile_level = 0.99;
  int quantile = 1;  // smallest k with renormalised CDF >= quantile_level
  int mode = 1;      // smallest maximiser
  double p_homogeneity = 0.0;
  double covered_mass = 1.0;
};

// Summaries of the pmf renormalised by its covered mass. Throws
// TruncationError when less than half the mass is covered.
KPlusSummary kplus_summaries(const KPlusPmf& pmf, double q = 0.99);

}  // namespace mixprior
