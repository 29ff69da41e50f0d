#include "mixprior/partition_functionals.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mixprior/errors.hpp"
#include "mixprior/kplus_prior.hpp"
#include "mixprior/log_math.hpp"

namespace mixprior {

namespace {

struct SignedLog {
  double log_mag = kNegInf;
  bool negative = false;
  bool zero() const { return log_mag == kNegInf; }
};

SignedLog to_signed_log(double x) {
  if (x == 0.0) return {};
  return {std::log(std::fabs(x)), x < 0.0};
}

void check_k(const MixtureTables& tables, int k) {
  const int n = tables.spec().n();
  if (k < 1 || k > n) {
    throw InvalidArgument("K+ = " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  if (k > tables.depth()) {
    throw InvalidArgument("tables were built for K+ <= " + std::to_string(tables.depth()));
  }
}

// sum_t omega_t sum_{n=1}^{N-k+1} g(n) w_n C_{N-n,k-1}, g given for n = 1..N.
double single_moment(const MixtureTables& tables, int k, const std::vector<double>& g) {
  const int n_total = tables.spec().n();
  const int len = n_total - k + 1;
  SignedLogSum acc;
  for (const auto& term : conditional_terms(tables, k)) {
    const auto& w = term.table->weights();
    for (int n = 1; n <= len; ++n) {
      if (g[n] == 0.0) continue;
      acc.add(term.log_omega + std::log(std::fabs(g[n])) + w.log_w(n) +
                  term.table->log_c(n_total - n, k - 1),
              g[n] < 0.0);
    }
  }
  return acc.value();
}

std::vector<double> kernel_values(const Functional& f, int n_max) {
  f.validate(n_max);
  std::vector<double> v(n_max + 1, 0.0);
  for (int n = 1; n <= n_max; ++n) v[n] = f(n);
  return v;
}

std::vector<double> squared(std::vector<double> v) {
  for (double& x : v) x *= x;
  return v;
}

double product_moment_shortcut(const MixtureTables& tables, const std::vector<double>& psi) {
  const int n_total = tables.spec().n();
  std::vector<double> g(n_total + 1, 0.0);
  for (int n = 1; n < n_total; ++n) g[n] = psi[n] * psi[n_total - n];
  return single_moment(tables, 2, g);
}

double product_moment_convolution(const MixtureTables& tables, int k,
                                  const std::vector<double>& psi) {
  const int n_total = tables.spec().n();
  const int len = n_total - k + 1;
  SignedLogSum acc;
  std::vector<SignedLog> a(len + 1);
  for (const auto& term : conditional_terms(tables, k)) {
    const auto& w = term.table->weights();
    // a_n = psi~(n) = psi(n) Gamma(n + gamma) / Gamma(n + 1)
    for (int n = 1; n <= len; ++n) {
      a[n] = to_signed_log(psi[n]);
      if (!a[n].zero()) a[n].log_mag += w.log_w(n);
    }
    // (A_k a_k)_s = sum_{m=1}^{s-1} a_m a_{s-m}, weighted by C_{N-s,k-2}.
    for (int s = 2; s <= len + 1; ++s) {
      const double log_c = term.table->log_c(n_total - s, k - 2);
      if (log_c == kNegInf) continue;
      SignedLogSum conv;
      for (int m = 1; m < s; ++m) {
        const auto& lhs = a[m];
        const auto& rhs = a[s - m];
        if (lhs.zero() || rhs.zero()) continue;
        conv.add(lhs.log_mag + rhs.log_mag, lhs.negative != rhs.negative);
      }
      const double mag = conv.log_magnitude();
      if (mag == kNegInf) continue;
      acc.add(term.log_omega + log_c + mag, conv.negative());
    }
  }
  return acc.value();
}

FunctionalStats assemble(int k, double e1, double e2, double e12) {
  FunctionalStats s;
  s.k = k;
  s.mean = k * e1;
  const double kk = k;
  s.raw_variance = kk * e2 + kk * (kk - 1.0) * e12 - kk * kk * e1 * e1;
  s.variance = std::max(0.0, s.raw_variance);
  s.sd = std::sqrt(s.variance);
  return s;
}

int weighted_cutoff(const KPlusPmf& pmf) {
  const double target = (1.0 - 1e-8) * pmf.covered_mass;
  double cum = 0.0;
  for (int k = 1; k <= pmf.n; ++k) {
    cum += pmf.probs[k - 1];
    if (cum >= target) return k;
  }
  return pmf.n;
}

template <class PerK>
FunctionalStats weighted(const ModelSpec& spec, PerK per_k) {
  const auto pmf = kplus_pmf(spec);
  const int k_cut = weighted_cutoff(pmf);
  const MixtureTables tables(spec, k_cut);
  FunctionalStats out;
  out.truncation_warning = pmf.truncation_warning;
  for (int k = 1; k <= k_cut; ++k) {
    const double p = pmf.prob(k);
    if (p == 0.0) continue;
    const auto s = per_k(tables, k);
    out.mean += s.mean * p;
    out.raw_variance += s.variance * p;
  }
  out.variance = std::max(0.0, out.raw_variance);
  out.sd = std::sqrt(out.variance);
  return out;
}

}  // namespace

Functional::Functional(std::string name, Kernel psi) : name_(std::move(name)), psi_(std::move(psi)) {
  if (!psi_) throw InvalidArgument("functional kernel is empty");
}

Functional Functional::entropy() {
  return Functional("entropy", [](int n) { return n * std::log(static_cast<double>(n)); });
}

Functional Functional::singletons() {
  return Functional("singletons", [](int n) { return n == 1 ? 1.0 : 0.0; });
}

Functional Functional::from_table(std::string name, std::vector<double> values) {
  const int size = static_cast<int>(values.size());
  Functional f(std::move(name), [v = std::move(values)](int n) {
    return (n >= 1 && n <= static_cast<int>(v.size())) ? v[n - 1] : std::nan("");
  });
  f.defined_up_to_ = size;
  return f;
}

void Functional::validate(int n_max) const {
  if (defined_up_to_ >= 0 && defined_up_to_ < n_max) {
    throw InvalidArgument("functional '" + name_ + "' defines psi(n) only up to n=" +
                          std::to_string(defined_up_to_) + ", need " + std::to_string(n_max));
  }
  for (int n = 1; n <= n_max; ++n) {
    if (!std::isfinite(psi_(n))) {
      throw InvalidArgument("functional '" + name_ + "' is not finite at n=" + std::to_string(n));
    }
  }
}

std::vector<double> marginal_size_pmf(const MixtureTables& tables, int k) {
  check_k(tables, k);
  const int n_total = tables.spec().n();
  const int len = n_total - k + 1;
  const auto terms = conditional_terms(tables, k);
  std::vector<double> pmf(len);
  for (int n = 1; n <= len; ++n) {
    LogSumAccumulator acc;
    for (const auto& t : terms) {
      acc.add(t.log_omega + t.table->weights().log_w(n) + t.table->log_c(n_total - n, k - 1));
    }
    pmf[n - 1] = std::exp(acc.log_value());
  }
  return pmf;
}

std::vector<double> marginal_size_pmf(const ModelSpec& spec, int k) {
  if (k < 1 || k > spec.n()) throw InvalidArgument("K+ outside 1..N");
  return marginal_size_pmf(MixtureTables(spec, k), k);
}

double expected_psi(const MixtureTables& tables, int k, const Functional& f) {
  check_k(tables, k);
  return single_moment(tables, k, kernel_values(f, tables.spec().n()));
}

double expected_psi(const ModelSpec& spec, int k, const Functional& f) {
  if (k < 1 || k > spec.n()) throw InvalidArgument("K+ outside 1..N");
  return expected_psi(MixtureTables(spec, k), k, f);
}

double expected_psi_product(const MixtureTables& tables, int k, const Functional& f) {
  check_k(tables, k);
  if (k < 2) throw InvalidArgument("the product moment needs K+ >= 2");
  const auto psi = kernel_values(f, tables.spec().n());
  return k == 2 ? product_moment_shortcut(tables, psi)
                : product_moment_convolution(tables, k, psi);
}

double expected_psi_product(const ModelSpec& spec, int k, const Functional& f) {
  if (k < 2 || k > spec.n()) throw InvalidArgument("the product moment needs 2 <= K+ <= N");
  return expected_psi_product(MixtureTables(spec, k), k, f);
}

double detail::expected_psi_product_convolution(const MixtureTables& tables, int k,
                                                const Functional& f) {
  check_k(tables, k);
  if (k < 2) throw InvalidArgument("the product moment needs K+ >= 2");
  return product_moment_convolution(tables, k, kernel_values(f, tables.spec().n()));
}

FunctionalStats functional_stats(const MixtureTables& tables, int k, const Functional& f) {
  check_k(tables, k);
  const auto psi = kernel_values(f, tables.spec().n());
  const double e1 = single_moment(tables, k, psi);
  const double e2 = single_moment(tables, k, squared(psi));
  double e12 = 0.0;
  if (k == 2) {
    e12 = product_moment_shortcut(tables, psi);
  } else if (k > 2) {
    e12 = product_moment_convolution(tables, k, psi);
  }
  auto s = assemble(k, e1, e2, e12);
  s.truncation_warning = tables.below_warn();
  return s;
}

FunctionalStats functional_stats(const ModelSpec& spec, int k, const Functional& f) {
  if (k < 1 || k > spec.n()) throw InvalidArgument("K+ outside 1..N");
  return functional_stats(MixtureTables(spec, k), k, f);
}

FunctionalStats relative_entropy_stats(const MixtureTables& tables, int k) {
  check_k(tables, k);
  if (k == 1) {
    FunctionalStats s;
    s.k = 1;
    return s;
  }
  const double n = tables.spec().n();
  const double log_k = std::log(static_cast<double>(k));
  const auto psi = functional_stats(tables, k, Functional::entropy());
  FunctionalStats s;
  s.k = k;
  s.mean = (std::log(n) - psi.mean / n) / log_k;
  s.raw_variance = psi.raw_variance / (n * n * log_k * log_k);
  s.variance = std::max(0.0, s.raw_variance);
  s.sd = std::sqrt(s.variance);
  s.truncation_warning = psi.truncation_warning;
  return s;
}

FunctionalStats relative_entropy_stats(const ModelSpec& spec, int k) {
  if (k < 1 || k > spec.n()) throw InvalidArgument("K+ outside 1..N");
  return relative_entropy_stats(MixtureTables(spec, k), k);
}

FunctionalStats singleton_stats(const ModelSpec& spec, int k) {
  return functional_stats(spec, k, Functional::singletons());
}

FunctionalStats weighted_stats(const ModelSpec& spec, const Functional& f) {
  return weighted(spec, [&](const MixtureTables& t, int k) { return functional_stats(t, k, f); });
}

FunctionalStats weighted_relative_entropy_stats(const ModelSpec& spec) {
  return weighted(spec, [](const MixtureTables& t, int k) { return relative_entropy_stats(t, k); });
}

}  // namespace mixprior
