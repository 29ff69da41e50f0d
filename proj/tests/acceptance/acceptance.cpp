// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Tolerances and runtime limits are fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mixprior/eppf.hpp"
#include "mixprior/kplus_prior.hpp"
#include "mixprior/mc_oracle.hpp"
#include "mixprior/partition_functionals.hpp"
#include "mixprior/recursion_core.hpp"
#include "oracles.hpp"

using namespace mixprior;

namespace {

constexpr double kSeriesRelTol = 1e-10;      // 5
constexpr double kStirlingRelTol = 1e-10;    // 6
constexpr double kEnumerationRelTol = 1e-9;  // 7
constexpr double kPartitionRelTol = 1e-9;    // 8
constexpr double kLimitAbsTol = 1e-3;        // 10
constexpr double kPointMassAbsTol = 1e-12;   // 11
constexpr double kVRecursionRelTol = 1e-8;   // 12
constexpr double kMonteCarloSigmas = 4.0;    // 13
constexpr double kPriorInfluenceAbs = 0.05;  // 14

const ComponentCountPrior kUniform = ComponentCountPrior::uniform(1, 30);
const ComponentCountPrior kBnb = ComponentCountPrior::beta_neg_binomial(1, 4, 3);

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures with a short description of the first few.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 3) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream d;
    d << summary << " [" << checks_ - failures_ << "/" << checks_ << " checks]";
    if (failures_) d << " first failures: " << notes_.str();
    return {failures_ == 0, d.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::ostringstream notes_;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome dpm_mode_and_tail() {
  const auto pmf = kplus_pmf_dpm(100, 1.0 / 3);
  const auto s = kplus_summaries(pmf);
  double tail = 0.0;
  for (int k = 11; k <= 100; ++k) tail += pmf.prob(k);
  return {s.mode == 2 && tail < 1e-5, fmt("mode=%g P(K+>10)=%.3e", s.mode, tail)};
}

Outcome static_uniform_shape() {
  const auto pmf = kplus_pmf(ModelSpec::static_mfm(100, kUniform, 1.0));
  Checker c;
  for (int k = 1; k < 18; ++k) c.expect(pmf.prob(k + 1) >= pmf.prob(k), "not nondecreasing at k=" + std::to_string(k));
  for (int k = 21; k < 30; ++k) c.expect(pmf.prob(k + 1) < pmf.prob(k), "not decreasing at k=" + std::to_string(k));
  for (int k = 31; k <= 100; ++k) c.expect(pmf.prob(k) == 0.0, "nonzero at k=" + std::to_string(k));
  return c.outcome(fmt("argmax near k=%g", kplus_summaries(pmf).mode));
}

Outcome dynamic_bnb_homogeneity() {
  TruncationPolicy policy;
  policy.hard_cap = 5000;  // so the bound comes from the tail epsilon alone
  const auto pmf = kplus_pmf(ModelSpec::dynamic_mfm(100, kBnb, 0.4, policy));
  const auto s = kplus_summaries(pmf);
  std::ostringstream d;
  d << "mode=" << s.mode << " P(K+=1)=" << pmf.prob(1) << " K_max=" << pmf.k_max
    << " prior covered=" << pmf.prior_covered_mass;
  return {s.mode == 1 && pmf.prob(1) > 0.5 && pmf.prior_covered_mass >= 1.0 - 1e-10 - 1e-15, d.str()};
}

Outcome static_mean_at_500() {
  const auto s = kplus_summaries(kplus_pmf(ModelSpec::static_mfm(500, kUniform, 1.0)));
  return {s.mean >= 15.0 && s.mean <= 15.5, fmt("mean=%.6f", s.mean)};
}

Outcome dpm_mean_series() {
  Checker c;
  double worst = 0.0;
  for (int n : {10, 100, 1000}) {
    for (double a : {1.0 / 3, 1.0, 3.0}) {
      const double got = kplus_summaries(kplus_pmf_dpm(n, a)).mean;
      double want = 0.0;
      for (int i = 0; i < n; ++i) want += a / (a + i);
      const double err = oracle::rel_err(got, want);
      worst = std::max(worst, err);
      c.expect(err <= kSeriesRelTol, fmt("N=%g alpha=%g", n, a));
    }
  }
  return c.outcome(fmt("max rel err %.2e", worst));
}

Outcome stirling_identity() {
  const auto s = oracle::stirling_first(15);
  Checker c;
  double worst = 0.0;
  for (int n = 1; n <= 15; ++n) {
    const auto t = build_c_table_dpm(n, n);
    for (int k = 1; k <= n; ++k) {
      const double got = t.log_c(n, k) + std::lgamma(n + 1.0) - std::lgamma(k + 1.0);
      const double want = std::log(static_cast<double>(s[n][k]));
      const double err = std::fabs(got - want) / std::max(1.0, std::fabs(want));
      worst = std::max(worst, err);
      c.expect(err <= kStirlingRelTol, fmt("N=%g k=%g", n, k));
    }
  }
  return c.outcome(fmt("max log-domain rel err %.2e", worst));
}

// Variances are differences of second moments, so their error is measured
// against the second moment they were computed from.
bool variance_close(double got, const oracle::Moments& want, double rel) {
  const double scale = std::fabs(want.variance) + want.mean * want.mean;
  return std::fabs(got - want.variance) <= rel * std::max(scale, 1e-300);
}

Outcome composition_enumeration() {
  Checker c;
  for (double g : {0.1, 1.0, 4.0, 0.0}) {
    const std::string tag = g > 0 ? fmt("gamma=%g", g) : std::string("dpm");
    for (int n = 1; n <= 12; ++n) {
      const auto spec = g > 0 ? ModelSpec::static_mfm(n, kUniform, g) : ModelSpec::dpm(n, 1.0);
      const MixtureTables tables(spec, n);
      const auto& table = tables.shared_table();
      for (int k = 1; k <= n; ++k) {
        const std::string at = tag + fmt(" N=%g k=%g", n, k);
        for (int m = k; m <= n; ++m) {
          c.expect(oracle::rel_err(std::exp(table.log_c(m, k)), oracle::c_value(m, k, g)) <= kEnumerationRelTol,
                   "C " + at);
        }
        const auto mix = oracle::single(n, k, g);
        oracle::for_each_composition(n, k, [&](const std::vector<int>& parts) {
          c.expect(oracle::rel_err(conditional_sizes_prior(LabelledSizes(parts), tables), mix.prob(parts)) <=
                       kEnumerationRelTol,
                   "sizes prior " + at);
        });
        const auto pmf = marginal_size_pmf(tables, k);
        const auto want_pmf = oracle::marginal_pmf(n, k, mix);
        for (std::size_t i = 0; i < pmf.size(); ++i) {
          c.expect(oracle::close(pmf[i], want_pmf[i], kEnumerationRelTol, 0.0), "marginal " + at);
        }
        const auto psi_entropy = [](int x) { return x * std::log(static_cast<double>(x)); };
        const auto psi_single = [](int x) { return x == 1 ? 1.0 : 0.0; };
        for (const auto& [f, psi] : {std::pair{Functional::entropy(), std::function<double(int)>(psi_entropy)},
                                     std::pair{Functional::singletons(), std::function<double(int)>(psi_single)}}) {
          const auto got = functional_stats(tables, k, f);
          const auto want = oracle::functional_moments(n, k, mix, psi);
          c.expect(oracle::close(got.mean, want.mean, kEnumerationRelTol, 0.0), f.name() + " mean " + at);
          c.expect(variance_close(got.raw_variance, want, kEnumerationRelTol), f.name() + " variance " + at);
        }
      }
    }
  }
  return c.outcome("C, sizes prior, marginal pmf, functional moments");
}

Outcome set_partition_sums() {
  Checker c;
  double worst = 0.0;
  const auto geo = ComponentCountPrior::geometric_with_mean(10);
  for (int n = 1; n <= 9; ++n) {
    const std::vector<ModelSpec> specs{ModelSpec::dpm(n, 1.0 / 3), ModelSpec::static_mfm(n, kUniform, 1.0),
                                       ModelSpec::dynamic_mfm(n, kBnb, 0.4), ModelSpec::dynamic_mfm(n, geo, 2.0)};
    for (const auto& spec : specs) {
      const auto pmf = kplus_pmf(spec);
      const auto sums = oracle::kplus_from_partitions(n, [&](const std::vector<int>& sizes) {
        return std::exp(log_eppf(LabelledSizes(sizes), spec));
      });
      for (int k = 1; k <= n; ++k) {
        const double err = oracle::rel_err(sums[k], pmf.prob(k));
        worst = std::max(worst, err);
        c.expect(err <= kPartitionRelTol, std::string(to_string(spec.model_class())) + fmt(" N=%g k=%g", n, k));
      }
    }
  }
  return c.outcome(fmt("max rel err %.2e", worst));
}

Outcome dpm_alpha_invariance() {
  Checker c;
  const MixtureTables t01(ModelSpec::dpm(100, 0.1), 8);
  const MixtureTables t1(ModelSpec::dpm(100, 1.0), 8);
  const MixtureTables t3(ModelSpec::dpm(100, 3.0), 8);
  for (int k : {2, 4, 6, 8}) {
    for (bool entropy : {true, false}) {
      auto stats = [&](const MixtureTables& t) {
        return entropy ? relative_entropy_stats(t, k) : functional_stats(t, k, Functional::singletons());
      };
      const auto a = stats(t01), b = stats(t1), d = stats(t3);
      const std::string what = (entropy ? "entropy" : "singletons") + fmt(" k=%g", k);
      c.expect(a.mean == b.mean && b.mean == d.mean, what + " mean");
      c.expect(a.variance == b.variance && b.variance == d.variance, what + " variance");
    }
  }
  return c.outcome("bitwise equality across alpha in {0.1, 1, 3}");
}

Outcome small_gamma_limit() {
  Checker c;
  double worst = 0.0;
  const MixtureTables sta(ModelSpec::static_mfm(100, kUniform, 1e-4), 8);
  const MixtureTables dpm(ModelSpec::dpm(100, 1.0), 8);
  for (int k : {2, 4, 6, 8}) {
    const auto a = relative_entropy_stats(sta, k);
    const auto b = relative_entropy_stats(dpm, k);
    const double err = std::max(std::fabs(a.mean - b.mean), std::fabs(a.sd - b.sd));
    worst = std::max(worst, err);
    c.expect(err <= kLimitAbsTol, fmt("k=%g diff %.2e", k, err));
  }
  return c.outcome(fmt("N=100 k in {2,4,6,8}, max abs diff %.2e", worst));
}

Outcome point_mass_agreement() {
  Checker c;
  double worst = 0.0;
  for (int k0 : {1, 2, 5, 10, 30}) {
    for (double g : {0.05, 1.0, 3.0}) {
      const auto a = kplus_pmf(ModelSpec::static_mfm(60, ComponentCountPrior::point_mass(k0), g));
      const auto b = kplus_pmf(ModelSpec::dynamic_mfm(60, ComponentCountPrior::point_mass(k0), g * k0));
      for (int k = 1; k <= 60; ++k) {
        const double err = std::fabs(a.prob(k) - b.prob(k));
        worst = std::max(worst, err);
        c.expect(err <= kPointMassAbsTol, fmt("K0=%g gamma=%g", k0, g));
      }
    }
  }
  return c.outcome(fmt("N=60, max abs diff %.2e", worst));
}

Outcome v_recursion() {
  const auto spec = ModelSpec::static_mfm(50, kUniform, 1.0);
  const auto table = static_v_table(spec, 50);
  Checker c;
  double worst = 0.0;
  // Beyond the support of p(K) the exact V is zero; the recursion leaves a
  // residue there, judged against the smallest nonzero V in the row.
  double smallest = INFINITY;
  for (int k = 1; k <= 50; ++k) {
    const double direct = log_v_marginal_direct(spec, 50, k);
    if (direct != -INFINITY) smallest = std::min(smallest, std::exp(direct));
  }
  double worst_residue = 0.0;
  for (int k = 1; k <= 50; ++k) {
    const double direct = log_v_marginal_direct(spec, 50, k);
    if (direct == -INFINITY) {
      const double residue = std::fabs(static_cast<double>(table.value(50, k))) / smallest;
      worst_residue = std::max(worst_residue, residue);
      c.expect(residue <= kVRecursionRelTol, fmt("k=%g residue %.2e", k, residue));
      continue;
    }
    const double rec = table.log_value(50, k);
    const double err = std::isfinite(rec) ? std::fabs(std::expm1(rec - direct)) : INFINITY;
    worst = std::max(worst, err);
    c.expect(err <= kVRecursionRelTol, fmt("k=%g err %.2e", k, err));
  }
  return c.outcome(fmt("N=50, max rel err %.2e, max residue beyond support %.2e", worst, worst_residue));
}

Outcome monte_carlo_agreement() {
  Checker c;
  const std::int64_t draws = 100000;
  const std::vector<std::pair<std::string, ModelSpec>> specs{
      {"dpm", ModelSpec::dpm(50, 1.0 / 3)},
      {"static", ModelSpec::static_mfm(50, kUniform, 1.0)},
      {"dynamic", ModelSpec::dynamic_mfm(50, kBnb, 0.4)}};
  double worst = 0.0;
  std::uint64_t seed = 20240601;
  for (const auto& [name, spec] : specs) {
    const auto pmf = kplus_pmf(spec);
    const auto est = estimate_kplus_pmf(spec, draws, seed++);
    for (int k = 1; k <= 50; ++k) {
      const double p = pmf.prob(k);
      if (p < 1e-3) continue;
      const double se = std::sqrt(p * (1 - p) / draws);
      const double z = std::fabs(est.prob(k) - p) / se;
      worst = std::max(worst, z);
      c.expect(z <= kMonteCarloSigmas, name + fmt(" k=%g z=%.2f", k, z));
    }
  }
  return c.outcome(fmt("1e5 draws per spec, max |z| %.2f", worst));
}

Outcome prior_influence() {
  const double a = relative_entropy_stats(ModelSpec::dynamic_mfm(100, kBnb, 1.0), 4).mean;
  const double b = relative_entropy_stats(ModelSpec::dynamic_mfm(100, kUniform, 1.0), 4).mean;
  const double c = relative_entropy_stats(
      ModelSpec::dynamic_mfm(100, ComponentCountPrior::geometric_with_mean(10), 1.0), 4).mean;
  const double spread = std::max({std::fabs(a - b), std::fabs(a - c), std::fabs(b - c)});
  std::ostringstream d;
  d << "bnb=" << a << " uniform=" << b << " geometric=" << c << " max diff=" << spread;
  return {spread < kPriorInfluenceAbs, d.str()};
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 for no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "DPM alpha=1/3 N=100: mode at 2, P(K+>10) < 1e-5", 1.0, dpm_mode_and_tail},
      {2, "static uniform N=100: pmf rises to 18, falls on 21..30, zero beyond 30", 5.0, static_uniform_shape},
      {3, "dynamic BNB(1,4,3) alpha=0.4 N=100: mode 1, P(K+=1) > 0.5", 60.0, dynamic_bnb_homogeneity},
      {4, "static uniform N=500: mean K+ in [15, 15.5]", 30.0, static_mean_at_500},
      {5, "DPM mean matches the analytic series", 0.0, dpm_mean_series},
      {6, "DPM C-values reproduce Stirling numbers, N <= 15", 0.0, stirling_identity},
      {7, "composition enumeration, N <= 12", 0.0, composition_enumeration},
      {8, "set-partition sums reproduce K+ pmf, N <= 9", 0.0, set_partition_sums},
      {9, "DPM conditional stats independent of alpha", 0.0, dpm_alpha_invariance},
      {10, "static gamma=1e-4 entropy stats approach DPM", 0.0, small_gamma_limit},
      {11, "static and dynamic agree under a point mass", 0.0, point_mass_agreement},
      {12, "static V recursion matches direct summation, N=50", 0.0, v_recursion},
      {13, "Monte Carlo K+ frequencies within 4 s.e., N=50", 60.0, monte_carlo_agreement},
      {14, "dynamic entropy means insensitive to prior on K", 0.0, prior_influence},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = out.pass;
    std::string timing = fmt("%.2fs", secs);
    if (c.time_limit_s > 0) {
      timing += fmt(" (limit %gs)", c.time_limit_s);
      if (secs > c.time_limit_s) pass = false;
    }
    std::printf("%s %2d  %s  -- %s, %s\n", pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), timing.c_str());
    std::fflush(stdout);
    if (!pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
