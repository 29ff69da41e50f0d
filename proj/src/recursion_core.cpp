#include "mixprior/recursion_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mixprior/errors.hpp"
#include "mixprior/log_math.hpp"
#include "mixprior/parallel.hpp"

namespace mixprior {

namespace {

void check_gamma(double gamma) {
  if (!(gamma >= kMinGamma) || !std::isfinite(gamma)) {
    throw InvalidArgument("Dirichlet parameter " + std::to_string(gamma) +
                          " is outside [1e-8, inf)");
  }
}

}  // namespace

WeightVector WeightVector::mixture(int n_max, double gamma) {
  if (n_max < 1) throw InvalidArgument("weight vector needs n_max >= 1");
  check_gamma(gamma);
  std::vector<double> log_w(n_max + 1, 0.0);
  for (int n = 1; n <= n_max; ++n) log_w[n] = std::lgamma(n + gamma) - log_factorial(n);
  return WeightVector(std::move(log_w), gamma, false);
}

WeightVector WeightVector::dirichlet_process(int n_max) {
  if (n_max < 1) throw InvalidArgument("weight vector needs n_max >= 1");
  std::vector<double> log_w(n_max + 1, 0.0);
  for (int n = 1; n <= n_max; ++n) log_w[n] = -std::log(static_cast<double>(n));
  return WeightVector(std::move(log_w), 0.0, true);
}

double CTable::log_c(int m, int k) const {
  if (k < 0 || k > k_max() || m < 0 || m > n()) {
    throw InvalidArgument("C_{" + std::to_string(m) + "," + std::to_string(k) +
                          "} outside the table");
  }
  if (k == 0) return m == 0 ? 0.0 : kNegInf;
  if (m < k) return kNegInf;
  return columns_[k][n() - m];
}

CTable build_c_table(const WeightVector& weights, int k_max) {
  const int n = weights.n_max();
  if (k_max < 1 || k_max > n) {
    throw InvalidArgument("k_max must satisfy 1 <= k_max <= N (k_max=" +
                          std::to_string(k_max) + ", N=" + std::to_string(n) + ")");
  }
  CTable table(weights);
  auto& cols = table.columns_;
  cols.resize(k_max + 1);

  cols[1].resize(n);
  for (int i = 0; i < n; ++i) cols[1][i] = weights.log_w(n - i);

  std::vector<double> scratch(n + 1);
  for (int k = 2; k <= k_max; ++k) {
    const auto& prev = cols[k - 1];
    auto& cur = cols[k];
    const int len = n - k + 1;
    cur.resize(len);
    for (int i = 0; i < len; ++i) {
      // entry i is C_{N-i,k} = sum_{j=1}^{N-i-k+1} w_j C_{N-i-j,k-1}
      const int terms = n - i - k + 1;
      double hi = kNegInf;
      for (int j = 1; j <= terms; ++j) {
        scratch[j] = weights.log_w(j) + prev[i + j];
        hi = std::max(hi, scratch[j]);
      }
      double sum = 0.0;
      for (int j = 1; j <= terms; ++j) sum += std::exp(scratch[j] - hi);
      cur[i] = hi + std::log(sum);
    }
  }
  return table;
}

CTable build_c_table(int n, double gamma, int k_max) {
  return build_c_table(WeightVector::mixture(n, gamma), k_max);
}

CTable build_c_table_dpm(int n, int k_max) {
  return build_c_table(WeightVector::dirichlet_process(n), k_max);
}

double log_v(int n, int k, int K, double gamma) {
  if (k > K) return kNegInf;
  const double gk = gamma * K;
  return std::lgamma(gk) + log_factorial(K) - std::lgamma(gk + n) - log_factorial(K - k);
}

double log_weight_tilde(const ComponentCountPrior& prior, int n, int k, int K, double gamma) {
  if (k > K) return kNegInf;
  const double lp = log_pmf_k(prior, K);
  if (lp == kNegInf) return kNegInf;
  const double gk = gamma * K;
  return lp + k * (std::log(gamma) - std::lgamma(1.0 + gamma)) + std::lgamma(gk) +
         log_factorial(K) - std::lgamma(gk + n) - log_factorial(K - k);
}

double log_v_marginal_direct(const ModelSpec& spec, int n, int k) {
  if (spec.model_class() != ModelClass::static_mfm) {
    throw InvalidArgument("direct V summation expects a static MFM");
  }
  const double gamma = spec.gammas().parameter();
  const auto bound = truncation_bound(spec.prior_k(), 1, spec.trunc());
  LogSumAccumulator acc;
  for (int K = std::max(k, spec.prior_k().support_min()); K <= bound.k_max; ++K) {
    acc.add(log_pmf_k(spec.prior_k(), K) + log_v(n, k, K, gamma));
  }
  return acc.log_value();
}

MixtureTables::MixtureTables(const ModelSpec& spec, int depth) : spec_(spec) {
  const int n = spec.n();
  depth_ = std::clamp(depth, 1, n);
  if (spec.is_dpm()) {
    shared_ = std::make_shared<const CTable>(build_c_table_dpm(n, depth_));
    return;
  }

  bound_ = truncation_bound(spec.prior_k(), 1, spec.trunc());
  const int k_lo = spec.prior_k().support_min();
  const int count = std::max(0, bound_.k_max - k_lo + 1);
  components_.resize(count);
  for (int i = 0; i < count; ++i) {
    const int K = k_lo + i;
    components_[i].K = K;
    components_[i].gamma = gamma_at(spec.gammas(), K);
    components_[i].log_prior = log_pmf_k(spec.prior_k(), K);
    check_gamma(components_[i].gamma);
  }

  if (!spec.gammas().is_dynamic()) {
    shared_ = std::make_shared<const CTable>(build_c_table(n, spec.gammas().parameter(), depth_));
    for (auto& c : components_) c.table = shared_;
    return;
  }
  parallel_for(components_.size(), [&](std::size_t i) {
    auto& c = components_[i];
    c.table = std::make_shared<const CTable>(build_c_table(n, c.gamma, std::min(depth_, c.K)));
  });
}

const CTable& MixtureTables::shared_table() const {
  if (!shared_) throw InvalidArgument("dynamic MFMs have one table per K");
  return *shared_;
}

MixingWeights mixing_weights(const MixtureTables& tables, int k) {
  const auto& spec = tables.spec();
  if (spec.is_dpm()) throw InvalidArgument("mixing weights are trivial for a DPM");
  if (k < 1 || k > tables.depth()) {
    throw InvalidArgument("k=" + std::to_string(k) + " outside 1.." +
                          std::to_string(tables.depth()));
  }
  MixingWeights out;
  out.k = k;
  out.covered_prior_mass = tables.truncation().covered_mass;
  out.below_warn = tables.below_warn();
  LogSumAccumulator norm;
  for (const auto& c : tables.components()) {
    if (c.K < k) continue;
    const double lw = log_weight_tilde(spec.prior_k(), spec.n(), k, c.K, c.gamma);
    out.terms.push_back({c.K, lw});
    norm.add(lw + c.table->log_c(spec.n(), k));
  }
  if (out.terms.empty()) {
    throw InvalidArgument("no component K >= " + std::to_string(k) + " within the truncation");
  }
  out.log_normalizer = norm.log_value();
  return out;
}

MixingWeights mixing_weights(const ModelSpec& spec, int k) {
  return mixing_weights(MixtureTables(spec, k), k);
}

std::vector<ConditionalTerm> conditional_terms(const MixtureTables& tables, int k) {
  const auto& spec = tables.spec();
  if (k < 1 || k > tables.depth()) {
    throw InvalidArgument("k=" + std::to_string(k) + " outside 1.." +
                          std::to_string(tables.depth()));
  }
  if (spec.model_class() != ModelClass::dynamic_mfm) {
    const auto& t = tables.shared_table();
    return {{-t.log_c(spec.n(), k), &t}};
  }
  const auto weights = mixing_weights(tables, k);
  std::vector<ConditionalTerm> out;
  out.reserve(weights.terms.size());
  std::size_t i = 0;
  for (const auto& c : tables.components()) {
    if (c.K < k) continue;
    out.push_back({weights.log_weight(i++), c.table.get()});
  }
  return out;
}

}  // namespace mixprior
