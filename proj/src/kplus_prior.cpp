#include "mixprior/kplus_prior.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mixprior/errors.hpp"
#include "mixprior/log_math.hpp"
#include "mixprior/parallel.hpp"
#include "mixprior/recursion_core.hpp"

namespace mixprior {

namespace {

void finish(KPlusPmf& pmf) {
  double total = 0.0;
  for (double p : pmf.probs) total += p;
  pmf.covered_mass = total;
}

double log_labelled_factor(int n, int k) { return log_factorial(n) - log_factorial(k); }

KPlusPmf kplus_pmf_mfm(const ModelSpec& spec) {
  const int n = spec.n();
  const auto& prior = spec.prior_k();
  const auto bound = truncation_bound(prior, 1, spec.trunc());
  const int k_lo = prior.support_min();
  const int count = std::max(0, bound.k_max - k_lo + 1);

  // terms[i][k - 1] = ln w~^{K}_{N,k} + ln C^{K}_{N,k} for K = k_lo + i.
  std::vector<std::vector<double>> terms(count);
  auto fill = [&](std::size_t i, const CTable& table, double gamma) {
    const int K = k_lo + static_cast<int>(i);
    const int depth = std::min(table.k_max(), K);
    terms[i].assign(depth, kNegInf);
    for (int k = 1; k <= depth; ++k) {
      terms[i][k - 1] = log_weight_tilde(prior, n, k, K, gamma) + table.log_c(n, k);
    }
  };

  if (spec.gammas().is_dynamic()) {
    parallel_for(count, [&](std::size_t i) {
      const int K = k_lo + static_cast<int>(i);
      const double gamma = gamma_at(spec.gammas(), K);
      fill(i, build_c_table(n, gamma, std::min(n, K)), gamma);
    });
  } else {
    const double gamma = spec.gammas().parameter();
    const CTable table = build_c_table(n, gamma, std::min(n, bound.k_max));
    for (int i = 0; i < count; ++i) fill(i, table, gamma);
  }

  KPlusPmf pmf;
  pmf.n = n;
  pmf.probs.assign(n, 0.0);
  pmf.k_max = bound.k_max;
  pmf.prior_covered_mass = bound.covered_mass;
  for (int k = 1; k <= n; ++k) {
    LogSumAccumulator acc;
    for (const auto& t : terms) {
      if (static_cast<int>(t.size()) >= k) acc.add(t[k - 1]);
    }
    if (acc.log_value() != kNegInf) {
      pmf.probs[k - 1] = std::exp(log_labelled_factor(n, k) + acc.log_value());
    }
  }
  finish(pmf);
  pmf.truncation_warning = pmf.covered_mass < spec.trunc().min_covered_mass_warn;
  return pmf;
}

}  // namespace

KPlusPmf kplus_pmf_dpm(int n, double alpha) {
  if (n < 1) throw InvalidArgument("sample size N must be >= 1");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidArgument("alpha must be positive");
  const CTable table = build_c_table_dpm(n, n);
  const double log_ewens = std::lgamma(alpha) - std::lgamma(alpha + n);
  const double log_alpha = std::log(alpha);

  KPlusPmf pmf;
  pmf.n = n;
  pmf.probs.resize(n);
  for (int k = 1; k <= n; ++k) {
    pmf.probs[k - 1] = std::exp(log_labelled_factor(n, k) + k * log_alpha + log_ewens +
                                table.log_c(n, k));
  }
  finish(pmf);
  return pmf;
}

KPlusPmf kplus_pmf(const ModelSpec& spec) {
  if (spec.is_dpm()) return kplus_pmf_dpm(spec.n(), spec.gammas().parameter());
  return kplus_pmf_mfm(spec);
}

KPlusSummary kplus_summaries(const KPlusPmf& pmf, double q) {
  if (!(q > 0.0 && q < 1.0)) throw InvalidArgument("quantile level must lie in (0,1)");
  if (pmf.probs.empty()) throw InvalidArgument("empty pmf");
  const double total = pmf.covered_mass;
  if (!(total >= 0.5)) {
    throw TruncationError("covered mass " + std::to_string(total) +
                          " is below 0.5; summaries are meaningless");
  }

  KPlusSummary s;
  s.quantile_level = q;
  s.covered_mass = total;
  double mean = 0.0;
  for (int k = 1; k <= pmf.n; ++k) mean += k * pmf.probs[k - 1];
  mean /= total;
  double var = 0.0;
  for (int k = 1; k <= pmf.n; ++k) var += (k - mean) * (k - mean) * pmf.probs[k - 1];
  s.mean = mean;
  s.sd = std::sqrt(var / total);
  s.p_homogeneity = pmf.probs[0] / total;

  double cum = 0.0;
  s.quantile = pmf.n;
  for (int k = 1; k <= pmf.n; ++k) {
    cum += pmf.probs[k - 1];
    if (cum >= q * total) {
      s.quantile = k;
      break;
    }
  }
  s.mode = static_cast<int>(std::max_element(pmf.probs.begin(), pmf.probs.end()) -
                            pmf.probs.begin()) + 1;
  return s;
}

}  // namespace mixprior
