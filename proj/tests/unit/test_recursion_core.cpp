#include <doctest.h>

#include <cmath>

#include "mixprior/errors.hpp"
#include "mixprior/log_math.hpp"
#include "mixprior/recursion_core.hpp"
#include "oracles.hpp"

using namespace mixprior;

namespace {
const ComponentCountPrior kUniform30 = ComponentCountPrior::uniform(1, 30);
}  // namespace

TEST_CASE("log-sum-exp helpers") {
  CHECK(log_add(kNegInf, kNegInf) == kNegInf);
  CHECK(log_add(std::log(2.0), std::log(3.0)) == doctest::Approx(std::log(5.0)).epsilon(1e-15));
  const std::vector<double> xs{1000.0, 1000.0};
  CHECK(log_sum_exp(xs) == doctest::Approx(1000.0 + std::log(2.0)).epsilon(1e-15));
  SignedLogSum s;
  s.add_value(3.0);
  s.add_value(-5.0);
  s.add_value(0.0);
  CHECK(s.value() == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(s.negative());
  CHECK(s.log_magnitude() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("single-cluster column") {
  for (double g : {0.1, 1.0, 4.0}) {
    const auto t = build_c_table(25, g, 3);
    CHECK(t.log_c(25, 1) == doctest::Approx(std::lgamma(25 + g) - std::lgamma(26.0)).epsilon(1e-14));
    const auto col = t.column(1);
    REQUIRE(col.size() == 25);
    for (int i = 0; i < 25; ++i) {
      CHECK(col[i] == doctest::Approx(std::lgamma(25 - i + g) - std::lgamma(26.0 - i)).epsilon(1e-14));
    }
  }
}

TEST_CASE("small values from composition counts") {
  CHECK(std::exp(build_c_table_dpm(3, 2).log_c(3, 2)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::exp(build_c_table(6, 1.0, 3).log_c(6, 3)) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(std::exp(build_c_table_dpm(4, 2).log_c(4, 2)) == doctest::Approx(11.0 / 12).epsilon(1e-15));
}

TEST_CASE("column layout and boundaries") {
  const auto t = build_c_table(10, 0.5, 4);
  CHECK(t.k_max() == 4);
  for (int k = 1; k <= 4; ++k) {
    const auto col = t.column(k);
    CHECK(col.size() == static_cast<std::size_t>(10 - k + 1));
    for (int i = 0; i < static_cast<int>(col.size()); ++i) CHECK(col[i] == t.log_c(10 - i, k));
  }
  CHECK(t.log_c(0, 0) == 0.0);
  CHECK(t.log_c(3, 0) == kNegInf);
  CHECK(t.log_c(2, 3) == kNegInf);
  CHECK_THROWS(build_c_table(5, 1.0, 6));
  CHECK_THROWS(build_c_table(5, 1.0, 0));
  CHECK_THROWS(build_c_table(5, 1e-9, 2));
}

TEST_CASE("matches composition enumeration for N <= 12") {
  for (double g : {0.1, 1.0, 4.0, 0.0}) {
    for (int n = 1; n <= 12; ++n) {
      const auto t = g > 0 ? build_c_table(n, g, n) : build_c_table_dpm(n, n);
      for (int k = 1; k <= n; ++k) {
        for (int m = k; m <= n; ++m) {
          CHECK(oracle::rel_err(std::exp(t.log_c(m, k)), oracle::c_value(m, k, g)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("gamma one gives binomial coefficients") {
  const auto t = build_c_table(60, 1.0, 60);
  for (int k = 1; k <= 60; ++k) {
    const double want = std::lgamma(60.0) - std::lgamma(static_cast<double>(k)) - std::lgamma(61.0 - k);
    CHECK(std::fabs(t.log_c(60, k) - want) <= 1e-10 * std::max(1.0, std::fabs(want)));
  }
}

TEST_CASE("dirichlet process table gives Stirling numbers") {
  const auto s = oracle::stirling_first(15);
  for (int n = 1; n <= 15; ++n) {
    const auto t = build_c_table_dpm(n, n);
    for (int k = 1; k <= n; ++k) {
      const double got = t.log_c(n, k) + std::lgamma(n + 1.0) - std::lgamma(k + 1.0);
      const double want = std::log(static_cast<double>(s[n][k]));
      CHECK(std::fabs(got - want) <= 1e-10 * std::max(1.0, std::fabs(want)));
    }
  }
}

TEST_CASE("entries stay finite over a wide gamma range") {
  for (double g : {1e-8, 1e-4, 1.0, 1e3}) {
    const auto wide = build_c_table(2000, g, 6);
    for (int k = 1; k <= 6; ++k) {
      for (double v : wide.column(k)) CHECK_MESSAGE(std::isfinite(v), "gamma " << g << " k " << k);
    }
    const auto deep = build_c_table(300, g, 300);
    bool finite = true;
    for (int k = 1; k <= 300; ++k) {
      for (double v : deep.column(k)) finite = finite && std::isfinite(v);
    }
    CHECK_MESSAGE(finite, "gamma " << g);
  }
}

TEST_CASE("closed form V") {
  CHECK(std::exp(log_v(5, 1, 1, 1.0)) == doctest::Approx(1.0 / 120).epsilon(1e-14));
  CHECK(log_v(5, 3, 2, 1.0) == kNegInf);
  CHECK(std::exp(log_v(2, 1, 2, 1.0)) == doctest::Approx(1.0 / 3).epsilon(1e-14));
}

TEST_CASE("static V recursion") {
  SUBCASE("single component") {
    const auto spec = ModelSpec::static_mfm(8, ComponentCountPrior::point_mass(1), 1.0);
    const auto v = static_v_table(spec, 1);
    for (int n = 1; n <= 8; ++n) {
      CHECK(oracle::rel_err(static_cast<double>(v.value(n, 1)), 1.0 / std::tgamma(n + 1.0)) < 1e-12);
    }
  }
  SUBCASE("uniform prior agrees with direct summation") {
    const auto spec = ModelSpec::static_mfm(10, ComponentCountPrior::uniform(1, 30), 1.0);
    const auto v = static_v_table(spec, 10);
    double direct = 0.0;
    for (int K = 3; K <= 30; ++K) direct += std::exp(log_v(10, 3, K, 1.0)) / 30.0;
    CHECK(oracle::rel_err(static_cast<double>(v.value(10, 3)), direct) < 1e-10);
    CHECK(oracle::rel_err(std::exp(log_v_marginal_direct(spec, 10, 3)), direct) < 1e-12);
  }
  SUBCASE("seed column") {
    const auto spec = ModelSpec::static_mfm(6, ComponentCountPrior::uniform(1, 30), 0.5);
    const auto v = static_v_table(spec, 3);
    double seed = 0.0;
    for (int K = 1; K <= 30; ++K) seed += std::tgamma(0.5 * K) / std::tgamma(0.5 * K + 6) / 30.0;
    CHECK(oracle::rel_err(static_cast<double>(v.value(6, 0)), seed) < 1e-12);
  }
  SUBCASE("working precision keeps up with the cancellation") {
    for (double g : {0.1, 1.0, 5.0}) {
      for (int n : {50, 120}) {
        const auto spec = ModelSpec::static_mfm(n, kUniform30, g);
        const auto v = static_v_table(spec, 30);
        for (int k = 1; k <= 30; ++k) {
          const double err = std::fabs(std::expm1(v.log_value(n, k) - log_v_marginal_direct(spec, n, k)));
          CHECK_MESSAGE(err < 1e-10, "gamma " << g << " n " << n << " k " << k);
        }
      }
    }
  }
  CHECK_THROWS(static_v_table(ModelSpec::dynamic_mfm(5, ComponentCountPrior::uniform(1, 30), 1.0), 2));
}

TEST_CASE("mixing weights") {
  SUBCASE("point mass reduces to one term") {
    const auto spec = ModelSpec::static_mfm(7, ComponentCountPrior::point_mass(4), 0.8);
    const auto mw = mixing_weights(spec, 3);
    REQUIRE(mw.terms.size() == 1);
    CHECK(mw.terms[0].K == 4);
    const auto t = build_c_table(7, 0.8, 3);
    CHECK(mw.log_weight(0) + t.log_c(7, 3) == doctest::Approx(0.0).epsilon(1e-13));
  }
  SUBCASE("static weights are normalised against the shared table") {
    const auto spec = ModelSpec::static_mfm(30, ComponentCountPrior::uniform(1, 30), 1.0);
    const MixtureTables tables(spec, 5);
    const auto mw = mixing_weights(tables, 5);
    double total = 0.0;
    for (std::size_t i = 0; i < mw.terms.size(); ++i) {
      total += std::exp(mw.log_weight(i) + tables.shared_table().log_c(30, 5));
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("dynamic weights are normalised against per-K tables") {
    const auto spec = ModelSpec::dynamic_mfm(20, ComponentCountPrior::beta_neg_binomial(1, 4, 3), 0.4);
    const MixtureTables tables(spec, 2);
    const auto mw = mixing_weights(tables, 2);
    double total = 0.0;
    std::size_t i = 0;
    for (const auto& c : tables.components()) {
      if (c.K < 2) continue;
      REQUIRE(mw.terms[i].K == c.K);
      total += std::exp(mw.log_weight(i) + c.table->log_c(20, 2));
      ++i;
    }
    CHECK(std::fabs(total - 1.0) < 1e-12);
  }
  SUBCASE("general form matches the Gamma(1 + alpha/K) display") {
    const double alpha = 0.4;
    const auto prior = ComponentCountPrior::beta_neg_binomial(1, 4, 3);
    for (int K : {2, 5, 40}) {
      const double g = alpha / K;
      const int n = 20, k = 2;
      const double display = log_pmf_k(prior, K) + std::lgamma(alpha) - std::lgamma(alpha + n) +
                             std::lgamma(K + 1.0) - std::lgamma(K - k + 1.0) + k * std::log(alpha / K) -
                             k * std::lgamma(1 + alpha / K);
      CHECK(log_weight_tilde(prior, n, k, K, g) == doctest::Approx(display).epsilon(1e-13));
    }
  }
  CHECK_THROWS(mixing_weights(ModelSpec::dpm(10, 1.0), 2));
}
