#include "mixprior/eppf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mixprior/errors.hpp"
#include "mixprior/log_math.hpp"

namespace mixprior {

namespace {

std::vector<int> sorted(std::span<const int> sizes) {
  std::vector<int> s(sizes.begin(), sizes.end());
  std::sort(s.begin(), s.end());
  return s;
}

void check_n(const LabelledSizes& sizes, const ModelSpec& spec) {
  if (sizes.n() != spec.n()) {
    throw InvalidArgument("sizes add up to " + std::to_string(sizes.n()) + " but N is " +
                          std::to_string(spec.n()));
  }
}

}  // namespace

LabelledSizes::LabelledSizes(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InvalidArgument("at least one cluster size is required");
  for (int s : sizes_) {
    if (s < 1) throw InvalidArgument("cluster sizes must be >= 1");
  }
  n_ = std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

LabelledSizes::LabelledSizes(std::vector<int> sizes, int n) : LabelledSizes(std::move(sizes)) {
  if (n_ != n) {
    throw InvalidArgument("cluster sizes add up to " + std::to_string(n_) + ", expected " +
                          std::to_string(n));
  }
}

double log_eppf_dpm(const LabelledSizes& sizes, double alpha) {
  if (!(alpha > 0.0)) throw InvalidArgument("alpha must be positive");
  double acc = sizes.k() * std::log(alpha) + std::lgamma(alpha) - std::lgamma(alpha + sizes.n());
  for (int s : sorted(sizes.sizes())) acc += std::lgamma(static_cast<double>(s));
  return acc;
}

double log_eppf_given_k(const LabelledSizes& sizes, int K, double gamma) {
  const int k = sizes.k();
  if (k > K) return kNegInf;
  if (!(gamma > 0.0)) throw InvalidArgument("gamma must be positive");
  double acc = log_v(sizes.n(), k, K, gamma) + k * (std::log(gamma) - std::lgamma(1.0 + gamma));
  for (int s : sorted(sizes.sizes())) acc += std::lgamma(s + gamma);
  return acc;
}

double log_eppf_mfm(const LabelledSizes& sizes, const ModelSpec& spec) {
  if (spec.is_dpm()) throw InvalidArgument("log_eppf_mfm expects an MFM spec");
  check_n(sizes, spec);
  const auto bound = truncation_bound(spec.prior_k(), 1, spec.trunc());
  LogSumAccumulator acc;
  for (int K = std::max(sizes.k(), spec.prior_k().support_min()); K <= bound.k_max; ++K) {
    acc.add(log_pmf_k(spec.prior_k(), K) +
            log_eppf_given_k(sizes, K, gamma_at(spec.gammas(), K)));
  }
  return acc.log_value();
}

double log_eppf(const LabelledSizes& sizes, const ModelSpec& spec) {
  if (spec.is_dpm()) {
    check_n(sizes, spec);
    return log_eppf_dpm(sizes, spec.gammas().parameter());
  }
  return log_eppf_mfm(sizes, spec);
}

double conditional_sizes_prior(const LabelledSizes& sizes, const MixtureTables& tables) {
  check_n(sizes, tables.spec());
  const auto ordered = sorted(sizes.sizes());
  LogSumAccumulator acc;
  for (const auto& term : conditional_terms(tables, sizes.k())) {
    double lp = term.log_omega;
    for (int s : ordered) lp += term.table->weights().log_w(s);
    acc.add(lp);
  }
  return std::exp(acc.log_value());
}

double conditional_sizes_prior(const LabelledSizes& sizes, const ModelSpec& spec) {
  check_n(sizes, spec);
  return conditional_sizes_prior(sizes, MixtureTables(spec, sizes.k()));
}

}  // namespace mixprior
