#include "mixprior/model_priors.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "mixprior/errors.hpp"
#include "mixprior/log_math.hpp"

namespace mixprior {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string format_number(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_real(std::string_view field, std::string_view context) {
  const std::string s(field);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw InvalidArgument("invalid number '" + s + "' in '" + std::string(context) + "'");
  }
  return v;
}

int parse_int(std::string_view field, std::string_view context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw InvalidArgument("invalid integer '" + std::string(field) + "' in '" +
                          std::string(context) + "'");
  }
  return v;
}

// Survival P(K > k_max) for the infinite-support families.
double geometric_tail(const GeometricPrior& g, int k_max) {
  return std::pow(1.0 - g.p, static_cast<double>(k_max));
}

}  // namespace

ComponentCountPrior ComponentCountPrior::uniform(int lo, int hi) {
  if (lo < 1 || hi < lo) {
    throw InvalidArgument("uniform prior needs 1 <= lo <= hi");
  }
  return ComponentCountPrior(UniformPrior{lo, hi});
}

ComponentCountPrior ComponentCountPrior::geometric(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("geometric prior needs p in (0,1)");
  return ComponentCountPrior(GeometricPrior{p});
}

ComponentCountPrior ComponentCountPrior::geometric_with_mean(double mean) {
  if (!(mean > 0.0)) throw InvalidArgument("geometric prior mean must be positive");
  return geometric(1.0 / (1.0 + mean));
}

ComponentCountPrior ComponentCountPrior::beta_neg_binomial(double r, double a, double b) {
  if (!(r > 0.0 && a > 0.0 && b > 0.0)) {
    throw InvalidArgument("beta-negative-binomial prior needs r, a, b > 0");
  }
  return ComponentCountPrior(BetaNegBinomialPrior{r, a, b});
}

ComponentCountPrior ComponentCountPrior::point_mass(int k0) {
  if (k0 < 1) throw InvalidArgument("point mass needs K0 >= 1");
  return ComponentCountPrior(PointMassPrior{k0});
}

ComponentCountPrior ComponentCountPrior::infinity() {
  return ComponentCountPrior(InfinitePointMass{});
}

bool ComponentCountPrior::has_finite_support() const {
  return std::holds_alternative<UniformPrior>(v_) || std::holds_alternative<PointMassPrior>(v_);
}

int ComponentCountPrior::support_min() const {
  return std::visit(Overloaded{[](const UniformPrior& u) { return u.lo; },
                               [](const PointMassPrior& m) { return m.k0; },
                               [](const auto&) { return 1; }},
                    v_);
}

std::optional<int> ComponentCountPrior::support_max() const {
  return std::visit(Overloaded{[](const UniformPrior& u) -> std::optional<int> { return u.hi; },
                               [](const PointMassPrior& m) -> std::optional<int> { return m.k0; },
                               [](const auto&) -> std::optional<int> { return std::nullopt; }},
                    v_);
}

std::string ComponentCountPrior::to_string() const {
  return std::visit(
      Overloaded{
          [](const UniformPrior& u) {
            return "uniform:" + std::to_string(u.lo) + ":" + std::to_string(u.hi);
          },
          [](const GeometricPrior& g) { return "geometric:" + format_number(g.p); },
          [](const BetaNegBinomialPrior& b) {
            return "bnb:" + format_number(b.r) + ":" + format_number(b.a) + ":" +
                   format_number(b.b);
          },
          [](const PointMassPrior& m) { return "fixed:" + std::to_string(m.k0); },
          [](const InfinitePointMass&) { return std::string("infinity"); }},
      v_);
}

double log_pmf_k(const ComponentCountPrior& prior, int K) {
  if (K < 1) return kNegInf;
  return std::visit(
      Overloaded{
          [K](const UniformPrior& u) {
            return (K < u.lo || K > u.hi) ? kNegInf : -std::log(static_cast<double>(u.hi - u.lo + 1));
          },
          [K](const GeometricPrior& g) {
            return std::log(g.p) + (K - 1) * std::log1p(-g.p);
          },
          [K](const BetaNegBinomialPrior& b) {
            const double x = K - 1;
            return std::lgamma(b.r + x) - log_factorial(K - 1) - std::lgamma(b.r) +
                   log_beta(b.a + b.r, b.b + x) - log_beta(b.a, b.b);
          },
          [K](const PointMassPrior& m) { return K == m.k0 ? 0.0 : kNegInf; },
          [](const InfinitePointMass&) { return kNegInf; }},
      prior.variant());
}

DirichletSequence DirichletSequence::constant(double gamma) {
  if (!(gamma >= kMinGamma) || !std::isfinite(gamma)) {
    throw InvalidArgument("static gamma must be finite and >= 1e-8");
  }
  return DirichletSequence(Kind::fixed, gamma);
}

DirichletSequence DirichletSequence::dynamic(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("dynamic alpha must be finite and positive");
  }
  return DirichletSequence(Kind::dynamic, alpha);
}

std::string DirichletSequence::to_string() const {
  return (kind_ == Kind::fixed ? "static:" : "dynamic:") + format_number(value_);
}

double gamma_at(const DirichletSequence& seq, int K) {
  return seq.is_dynamic() ? seq.parameter() / K : seq.parameter();
}

void TruncationPolicy::validate() const {
  if (!(tail_mass_epsilon > 0.0 && tail_mass_epsilon < 1.0)) {
    throw InvalidArgument("tail_mass_epsilon must lie in (0,1)");
  }
  if (hard_cap < 1) throw InvalidArgument("hard_cap must be positive");
  if (!(min_covered_mass_warn > 0.0 && min_covered_mass_warn < 1.0)) {
    throw InvalidArgument("min_covered_mass_warn must lie in (0,1)");
  }
}

TruncationBound truncation_bound(const ComponentCountPrior& prior, int k_lower,
                                 const TruncationPolicy& policy) {
  policy.validate();
  if (prior.is_infinity()) {
    throw InvalidArgument("no truncation bound for a point mass at infinity");
  }
  k_lower = std::max(k_lower, 1);
  if (const auto hi = prior.support_max()) {
    return {std::max(*hi, k_lower), 1.0, false};
  }
  if (k_lower > policy.hard_cap) {
    throw TruncationError("lower bound " + std::to_string(k_lower) + " exceeds hard cap " +
                          std::to_string(policy.hard_cap));
  }

  if (const auto* g = std::get_if<GeometricPrior>(&prior.variant())) {
    // (1-p)^k <= eps  <=>  k >= log(eps) / log(1-p)
    int k = static_cast<int>(std::ceil(std::log(policy.tail_mass_epsilon) / std::log1p(-g->p)));
    k = std::max(k, 1);
    while (k > 1 && geometric_tail(*g, k - 1) <= policy.tail_mass_epsilon) --k;
    while (geometric_tail(*g, k) > policy.tail_mass_epsilon) ++k;
    TruncationBound out;
    out.k_max = std::max(k, k_lower);
    out.capped = out.k_max > policy.hard_cap;
    out.k_max = std::min(out.k_max, policy.hard_cap);
    out.covered_mass = -std::expm1(out.k_max * std::log1p(-g->p));
    return out;
  }

  // Cumulative summation of the pmf.
  double cdf = 0.0;
  int K = 1;
  for (;; ++K) {
    cdf += std::exp(log_pmf_k(prior, K));
    if (K >= k_lower && 1.0 - cdf <= policy.tail_mass_epsilon) {
      return {K, cdf, false};
    }
    if (K == policy.hard_cap) return {K, cdf, true};
  }
}

std::string_view to_string(ModelClass c) {
  switch (c) {
    case ModelClass::dpm:
      return "dpm";
    case ModelClass::static_mfm:
      return "static";
    case ModelClass::dynamic_mfm:
      return "dynamic";
  }
  return "?";
}

ModelSpec::ModelSpec(int n, ComponentCountPrior prior_k, DirichletSequence gammas,
                     TruncationPolicy trunc)
    : n_(n), prior_k_(prior_k), gammas_(gammas), trunc_(trunc) {
  if (n < 1) throw InvalidArgument("sample size N must be >= 1");
  trunc_.validate();
  if (prior_k_.is_infinity()) {
    if (!gammas_.is_dynamic()) {
      throw InvalidArgument("a point mass at infinity needs a dynamic sequence (DPM)");
    }
    class_ = ModelClass::dpm;
  } else {
    class_ = gammas_.is_dynamic() ? ModelClass::dynamic_mfm : ModelClass::static_mfm;
  }
}

ModelSpec ModelSpec::dpm(int n, double alpha, TruncationPolicy trunc) {
  return ModelSpec(n, ComponentCountPrior::infinity(), DirichletSequence::dynamic(alpha), trunc);
}

ModelSpec ModelSpec::static_mfm(int n, ComponentCountPrior prior_k, double gamma,
                                TruncationPolicy trunc) {
  return ModelSpec(n, prior_k, DirichletSequence::constant(gamma), trunc);
}

ModelSpec ModelSpec::dynamic_mfm(int n, ComponentCountPrior prior_k, double alpha,
                                 TruncationPolicy trunc) {
  return ModelSpec(n, prior_k, DirichletSequence::dynamic(alpha), trunc);
}

ComponentCountPrior parse_component_count_prior(std::string_view text) {
  const auto parts = split(text, ':');
  const auto& head = parts.front();
  auto expect = [&](std::size_t count) {
    if (parts.size() != count) {
      throw InvalidArgument("malformed prior '" + std::string(text) + "'");
    }
  };
  if (head == "uniform") {
    expect(3);
    return ComponentCountPrior::uniform(parse_int(parts[1], text), parse_int(parts[2], text));
  }
  if (head == "geometric") {
    expect(2);
    return ComponentCountPrior::geometric(parse_real(parts[1], text));
  }
  if (head == "bnb") {
    expect(4);
    return ComponentCountPrior::beta_neg_binomial(
        parse_real(parts[1], text), parse_real(parts[2], text), parse_real(parts[3], text));
  }
  if (head == "fixed") {
    expect(2);
    return ComponentCountPrior::point_mass(parse_int(parts[1], text));
  }
  if (head == "infinity") {
    expect(1);
    return ComponentCountPrior::infinity();
  }
  throw InvalidArgument("unknown prior family '" + std::string(head) + "'");
}

DirichletSequence parse_dirichlet_sequence(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw InvalidArgument("malformed sequence '" + std::string(text) + "'");
  const double v = parse_real(parts[1], text);
  if (parts[0] == "static") return DirichletSequence::constant(v);
  if (parts[0] == "dynamic") return DirichletSequence::dynamic(v);
  throw InvalidArgument("unknown sequence kind '" + std::string(parts[0]) + "'");
}

}  // namespace mixprior
