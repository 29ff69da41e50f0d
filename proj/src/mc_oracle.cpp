#include "mixprior/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mixprior/errors.hpp"
#include "mixprior/log_math.hpp"
#include "mixprior/parallel.hpp"

namespace mixprior {

double Rng::uniform() {
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::log_gamma_variate(double shape) {
  if (!(shape > 0.0)) throw InvalidArgument("gamma shape must be positive");
  if (shape < 1.0) {
    return log_gamma_variate(shape + 1.0) + std::log(uniform()) / shape;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    const double x = normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2 || std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return std::log(d) + std::log(v);
    }
  }
}

std::uint64_t Rng::derive_seed(std::uint64_t master, std::uint64_t stream) {
  auto splitmix = [](std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t state = master;
  const std::uint64_t a = splitmix(state);
  state = a ^ stream;
  return splitmix(state);
}

double relative_entropy(const std::vector<int>& sizes, int n) {
  const int k = static_cast<int>(sizes.size());
  if (k <= 1) return 0.0;
  double h = 0.0;
  for (int s : sizes) {
    const double p = static_cast<double>(s) / n;
    h -= p * std::log(p);
  }
  return h / std::log(static_cast<double>(k));
}

namespace {

// Draws K from p(K) by inverse CDF over a precomputed table.
class ComponentSampler {
 public:
  explicit ComponentSampler(const ComponentCountPrior& prior) : prior_(prior) {
    if (prior.is_infinity() || prior.has_finite_support()) return;
    if (std::holds_alternative<GeometricPrior>(prior.variant())) return;
    double cdf = 0.0;
    for (int K = 1; K <= kTableLimit; ++K) {
      cdf += std::exp(log_pmf_k(prior, K));
      cdf_.push_back(cdf);
      if (1.0 - cdf < 1e-13) break;
    }
  }

  int draw(Rng& rng) const {
    const auto& v = prior_.variant();
    if (const auto* u = std::get_if<UniformPrior>(&v)) {
      const int width = u->hi - u->lo + 1;
      return u->lo + std::min(width - 1, static_cast<int>(rng.uniform() * width));
    }
    if (const auto* m = std::get_if<PointMassPrior>(&v)) return m->k0;
    if (const auto* g = std::get_if<GeometricPrior>(&v)) {
      // P(K - 1 >= x) = (1 - p)^x
      const double x = std::floor(std::log(rng.uniform()) / std::log1p(-g->p));
      return 1 + static_cast<int>(std::min(x, 1e9));
    }
    const double u = rng.uniform();
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    if (it != cdf_.end()) return static_cast<int>(it - cdf_.begin()) + 1;
    // Far tail beyond the table.
    double cdf = cdf_.back();
    int K = static_cast<int>(cdf_.size());
    while (cdf < u && K < 1'000'000'000) {
      const double p = std::exp(log_pmf_k(prior_, ++K));
      if (p == 0.0) break;
      cdf += p;
    }
    return K;
  }

 private:
  static constexpr int kTableLimit = 1'000'000;
  ComponentCountPrior prior_;
  std::vector<double> cdf_;
};

class Simulator {
 public:
  explicit Simulator(const ModelSpec& spec) : spec_(spec), components_(spec.prior_k()) {}

  PartitionSample draw(Rng& rng) const {
    const int n = spec_.n();
    PartitionSample s;
    s.assignments.resize(n);
    if (spec_.is_dpm()) {
      const double alpha = spec_.gammas().parameter();
      int tables = 0;
      for (int i = 0; i < n; ++i) {
        if (rng.uniform() * (alpha + i) < alpha) {
          s.assignments[i] = tables++;
        } else {
          // join the table of a uniformly chosen earlier customer
          const int j = std::min(i - 1, static_cast<int>(rng.uniform() * i));
          s.assignments[i] = s.assignments[j];
        }
      }
    } else {
      const int K = components_.draw(rng);
      s.components = K;
      const double gamma = gamma_at(spec_.gammas(), K);
      std::vector<double> cum(K);
      double hi = kNegInf;
      for (int j = 0; j < K; ++j) {
        cum[j] = rng.log_gamma_variate(gamma);
        hi = std::max(hi, cum[j]);
      }
      double total = 0.0;
      for (int j = 0; j < K; ++j) {
        total += std::exp(cum[j] - hi);
        cum[j] = total;
      }
      for (int i = 0; i < n; ++i) {
        const double u = rng.uniform() * total;
        const auto it = std::upper_bound(cum.begin(), cum.end(), u);
        s.assignments[i] = std::min(K - 1, static_cast<int>(it - cum.begin()));
      }
    }
    relabel(s);
    return s;
  }

 private:
  static void relabel(PartitionSample& s) {
    std::vector<int> map;
    std::vector<int> seen;
    for (int& a : s.assignments) {
      if (a >= static_cast<int>(seen.size())) seen.resize(a + 1, -1);
      if (seen[a] < 0) {
        seen[a] = static_cast<int>(s.sizes.size());
        s.sizes.push_back(0);
      }
      a = seen[a];
      ++s.sizes[a];
    }
    s.k_plus = static_cast<int>(s.sizes.size());
  }

  ModelSpec spec_;
  ComponentSampler components_;
};

std::int64_t block_count(std::int64_t draws) {
  return (draws + kSimulationBlock - 1) / kSimulationBlock;
}

std::int64_t block_size(std::int64_t block, std::int64_t draws) {
  return std::min(kSimulationBlock, draws - block * kSimulationBlock);
}

template <class Statistic>
ConditionalEstimate estimate_conditional(const ModelSpec& spec, int k, std::int64_t n_accepted,
                                         std::uint64_t seed, std::int64_t budget,
                                         Statistic stat) {
  if (k < 1 || k > spec.n()) throw InvalidArgument("K+ outside 1..N");
  if (n_accepted < 1) throw InvalidArgument("need at least one accepted draw");
  const Simulator sim(spec);

  struct Hit {
    std::int64_t position;
    double value;
  };
  std::vector<double> values;
  values.reserve(n_accepted);
  std::int64_t drawn = 0;
  std::int64_t next_block = 0;
  const std::int64_t blocks_per_round = std::max(8, 4 * thread_count());

  while (static_cast<std::int64_t>(values.size()) < n_accepted) {
    if (next_block * kSimulationBlock >= budget) {
      throw BudgetExceeded("only " + std::to_string(values.size()) + " of " +
                           std::to_string(n_accepted) + " draws with K+ = " + std::to_string(k) +
                           " after " + std::to_string(budget) + " simulated partitions");
    }
    const std::int64_t max_blocks = block_count(budget);
    const std::int64_t round = std::min(blocks_per_round, max_blocks - next_block);
    std::vector<std::vector<Hit>> hits(round);
    parallel_for(round, [&](std::size_t r) {
      const std::int64_t b = next_block + static_cast<std::int64_t>(r);
      Rng rng(Rng::derive_seed(seed, b));
      const std::int64_t size = block_size(b, budget);
      for (std::int64_t i = 0; i < size; ++i) {
        const auto s = sim.draw(rng);
        if (s.k_plus == k) hits[r].push_back({i, stat(s)});
      }
    });
    for (std::int64_t r = 0; r < round; ++r) {
      const std::int64_t b = next_block + r;
      for (const auto& h : hits[r]) {
        if (static_cast<std::int64_t>(values.size()) == n_accepted) break;
        values.push_back(h.value);
        drawn = b * kSimulationBlock + h.position + 1;
      }
      if (static_cast<std::int64_t>(values.size()) == n_accepted) break;
    }
    next_block += round;
  }

  ConditionalEstimate out;
  out.accepted = n_accepted;
  out.drawn = drawn;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n_accepted;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  out.mean = mean;
  out.variance = n_accepted > 1 ? ss / (n_accepted - 1) : 0.0;
  out.se = std::sqrt(out.variance / n_accepted);
  return out;
}

}  // namespace

PartitionSample simulate_partition(const ModelSpec& spec, Rng& rng) {
  return Simulator(spec).draw(rng);
}

PartitionSample simulate_partition(const ModelSpec& spec, std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  return simulate_partition(spec, rng);
}

std::vector<PartitionSample> simulate_partitions(const ModelSpec& spec, std::int64_t n_draws,
                                                 std::uint64_t rng_seed) {
  if (n_draws < 1) throw InvalidArgument("n_draws must be >= 1");
  const Simulator sim(spec);
  std::vector<PartitionSample> out(n_draws);
  parallel_for(block_count(n_draws), [&](std::size_t b) {
    Rng rng(Rng::derive_seed(rng_seed, b));
    const std::int64_t first = static_cast<std::int64_t>(b) * kSimulationBlock;
    for (std::int64_t i = 0; i < block_size(b, n_draws); ++i) out[first + i] = sim.draw(rng);
  });
  return out;
}

EmpiricalPmf estimate_kplus_pmf(const ModelSpec& spec, std::int64_t n_draws,
                                std::uint64_t rng_seed) {
  if (n_draws < 1) throw InvalidArgument("n_draws must be >= 1");
  const Simulator sim(spec);
  const int n = spec.n();
  const std::int64_t blocks = block_count(n_draws);
  std::vector<std::vector<std::int64_t>> per_block(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    Rng rng(Rng::derive_seed(rng_seed, b));
    auto& counts = per_block[b];
    counts.assign(n, 0);
    const std::int64_t size = block_size(b, n_draws);
    for (std::int64_t i = 0; i < size; ++i) ++counts[sim.draw(rng).k_plus - 1];
  });

  EmpiricalPmf out;
  out.n = n;
  out.draws = n_draws;
  out.counts.assign(n, 0);
  for (const auto& c : per_block) {
    for (int k = 0; k < n; ++k) out.counts[k] += c[k];
  }
  out.freq.resize(n);
  out.se.resize(n);
  for (int k = 0; k < n; ++k) {
    const double p = static_cast<double>(out.counts[k]) / n_draws;
    out.freq[k] = p;
    out.se[k] = std::sqrt(p * (1.0 - p) / n_draws);
  }
  return out;
}

ConditionalEstimate estimate_conditional_functional(const ModelSpec& spec, int k,
                                                    const Functional& f,
                                                    std::int64_t n_accepted,
                                                    std::uint64_t rng_seed,
                                                    std::int64_t draw_budget) {
  f.validate(spec.n());
  return estimate_conditional(spec, k, n_accepted, rng_seed, draw_budget,
                              [&f](const PartitionSample& s) {
                                double psi = 0.0;
                                for (int size : s.sizes) psi += f(size);
                                return psi;
                              });
}

ConditionalEstimate estimate_conditional_relative_entropy(const ModelSpec& spec, int k,
                                                          std::int64_t n_accepted,
                                                          std::uint64_t rng_seed,
                                                          std::int64_t draw_budget) {
  const int n = spec.n();
  return estimate_conditional(
      spec, k, n_accepted, rng_seed, draw_budget,
      [n](const PartitionSample& s) { return relative_entropy(s.sizes, n); });
}

RelativeEntropyEstimate estimate_relative_entropy(const ModelSpec& spec, std::int64_t n_draws,
                                                  std::uint64_t rng_seed) {
  if (n_draws < 1) throw InvalidArgument("n_draws must be >= 1");
  const Simulator sim(spec);
  const int n = spec.n();
  const std::int64_t blocks = block_count(n_draws);
  struct Moments {
    std::vector<std::int64_t> count;
    std::vector<double> sum, sum_sq;
  };
  std::vector<Moments> per_block(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    Rng rng(Rng::derive_seed(rng_seed, b));
    auto& m = per_block[b];
    m.count.assign(n + 1, 0);
    m.sum.assign(n + 1, 0.0);
    m.sum_sq.assign(n + 1, 0.0);
    const std::int64_t size = block_size(b, n_draws);
    for (std::int64_t i = 0; i < size; ++i) {
      const auto s = sim.draw(rng);
      const double e = relative_entropy(s.sizes, n);
      ++m.count[s.k_plus];
      m.sum[s.k_plus] += e;
      m.sum_sq[s.k_plus] += e * e;
    }
  });

  Moments total{std::vector<std::int64_t>(n + 1, 0), std::vector<double>(n + 1, 0.0),
                std::vector<double>(n + 1, 0.0)};
  for (const auto& m : per_block) {
    for (int k = 0; k <= n; ++k) {
      total.count[k] += m.count[k];
      total.sum[k] += m.sum[k];
      total.sum_sq[k] += m.sum_sq[k];
    }
  }
  RelativeEntropyEstimate out;
  out.draws = n_draws;
  double s1 = 0.0, s2 = 0.0;
  for (int k = 1; k <= n; ++k) {
    s1 += total.sum[k];
    s2 += total.sum_sq[k];
    if (total.count[k] == 0) continue;
    const double c = static_cast<double>(total.count[k]);
    const double mk = total.sum[k] / c;
    const double vk = std::max(0.0, total.sum_sq[k] / c - mk * mk);
    out.weighted_conditional_variance += vk * c / n_draws;
  }
  out.mean = s1 / n_draws;
  out.total_variance = std::max(0.0, s2 / n_draws - out.mean * out.mean);
  return out;
}

}  // namespace mixprior
