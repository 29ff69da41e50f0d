#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace mixprior {

// Uniform on {lo, ..., hi}.
struct UniformPrior {
  int lo = 1;
  int hi = 1;

  friend bool operator==(const UniformPrior&, const UniformPrior&) = default;
};

// Geometric on K - 1 with success probability p: P(K) = p (1 - p)^(K - 1).
struct GeometricPrior {
  double p = 0.5;

  friend bool operator==(const GeometricPrior&, const GeometricPrior&) = default;
};

// Beta-negative-binomial BNB(r, a, b) on K - 1:
//   P(X = x) = Gamma(r + x) / (x! Gamma(r)) * B(a + r, b + x) / B(a, b).
struct BetaNegBinomialPrior {
  double r = 1.0;
  double a = 1.0;
  double b = 1.0;

  friend bool operator==(const BetaNegBinomialPrior&, const BetaNegBinomialPrior&) = default;
};

struct PointMassPrior {
  int k0 = 1;

  friend bool operator==(const PointMassPrior&, const PointMassPrior&) = default;
};

// All mass at K = infinity (Dirichlet process).
struct InfinitePointMass {
  friend bool operator==(const InfinitePointMass&, const InfinitePointMass&) = default;
};

// Prior p(K) on the number of mixture components.
class ComponentCountPrior {
 public:
  using Variant = std::variant<UniformPrior, GeometricPrior, BetaNegBinomialPrior,
                               PointMassPrior, InfinitePointMass>;

  static ComponentCountPrior uniform(int lo, int hi);
  static ComponentCountPrior geometric(double p);
  // Geometric on K - 1 with the given mean (1 - p) / p.
  static ComponentCountPrior geometric_with_mean(double mean);
  static ComponentCountPrior beta_neg_binomial(double r, double a, double b);
  static ComponentCountPrior point_mass(int k0);
  static ComponentCountPrior infinity();

  const Variant& variant() const { return v_; }
  bool is_infinity() const { return std::holds_alternative<InfinitePointMass>(v_); }
  bool has_finite_support() const;
  // Smallest K with positive mass. Undefined for infinity().
  int support_min() const;
  // Largest K with positive mass, if finite.
  std::optional<int> support_max() const;

  // CLI grammar: uniform:LO:HI, geometric:P, bnb:R:A:B, fixed:K, infinity.
  std::string to_string() const;

  friend bool operator==(const ComponentCountPrior&, const ComponentCountPrior&) = default;

 private:
  explicit ComponentCountPrior(Variant v) : v_(v) {}
  Variant v_;
};


// ln p(K); -inf outside the support (and for every finite K under infinity()).
double log_pmf_k(const ComponentCountPrior& prior, int K);

// Dirichlet parameter sequence gamma_K.
class DirichletSequence {
 public:
  enum class Kind { fixed, dynamic };

  // gamma_K = gamma for every K.
  static DirichletSequence constant(double gamma);
  // gamma_K = alpha / K.
  static DirichletSequence dynamic(double alpha);

  Kind kind() const { return kind_; }
  bool is_dynamic() const { return kind_ == Kind::dynamic; }
  // gamma for constant sequences, alpha for dynamic ones.
  double parameter() const { return value_; }

  // CLI grammar: static:G, dynamic:A.
  std::string to_string() const;

  friend bool operator==(const DirichletSequence&, const DirichletSequence&) = default;

 private:
  DirichletSequence(Kind kind, double value) : kind_(kind), value_(value) {}
  Kind kind_;
  double value_;
};

double gamma_at(const DirichletSequence& seq, int K);

struct TruncationPolicy {
  double tail_mass_epsilon = 1e-10;
  int hard_cap = 500;
  double min_covered_mass_warn = 0.999;

  void validate() const;
};

struct TruncationBound {
  int k_max = 1;
  double covered_mass = 1.0;  // sum of p(K) for K <= k_max
  bool capped = false;        // hard_cap was hit before the tail dropped below epsilon
};

// Smallest k_max >= k_lower whose p(K) tail beyond k_max is at most
// policy.tail_mass_epsilon. Priors with infinite support are clamped to
// policy.hard_cap; finite-support priors always use their upper support end.
// Throws InvalidArgument for infinity().
TruncationBound truncation_bound(const ComponentCountPrior& prior, int k_lower,
                                 const TruncationPolicy& policy);

enum class ModelClass { dpm, static_mfm, dynamic_mfm };

std::string_view to_string(ModelClass c);

// Sample size, p(K), gamma sequence and truncation policy.
class ModelSpec {
 public:
  ModelSpec(int n, ComponentCountPrior prior_k, DirichletSequence gammas,
            TruncationPolicy trunc = {});

  static ModelSpec dpm(int n, double alpha, TruncationPolicy trunc = {});
  static ModelSpec static_mfm(int n, ComponentCountPrior prior_k, double gamma,
                              TruncationPolicy trunc = {});
  static ModelSpec dynamic_mfm(int n, ComponentCountPrior prior_k, double alpha,
                               TruncationPolicy trunc = {});

  int n() const { return n_; }
  const ComponentCountPrior& prior_k() const { return prior_k_; }
  const DirichletSequence& gammas() const { return gammas_; }
  const TruncationPolicy& trunc() const { return trunc_; }
  ModelClass model_class() const { return class_; }
  bool is_dpm() const { return class_ == ModelClass::dpm; }

  ModelSpec with_n(int n) const { return ModelSpec(n, prior_k_, gammas_, trunc_); }

 private:
  int n_;
  ComponentCountPrior prior_k_;
  DirichletSequence gammas_;
  TruncationPolicy trunc_;
  ModelClass class_;
};

// Smallest Dirichlet parameter accepted anywhere in the library.
inline constexpr double kMinGamma = 1e-8;

ComponentCountPrior parse_component_count_prior(std::string_view text);
DirichletSequence parse_dirichlet_sequence(std::string_view text);

}  // namespace mixprior
