#include <mpfr.h>

#include <algorithm>
#include <cmath>

#include "mixprior/errors.hpp"
#include "mixprior/recursion_core.hpp"

namespace mixprior {

namespace {

class Mp {
 public:
  explicit Mp(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Mp(const Mp& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Mp& operator=(const Mp& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Mp() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace

std::size_t StaticVTable::index(int n, int k) const {
  if (n < 0 || n > n_max_ || k < 0 || k > std::min(n, k_max_)) {
    throw InvalidArgument("V_{n,k} outside the table");
  }
  return static_cast<std::size_t>(n) * (k_max_ + 1) + k;
}

long double StaticVTable::value(int n, int k) const {
  const auto i = index(n, k);
  return sign_[i] == 0 ? 0.0L : sign_[i] * std::exp(static_cast<long double>(log_abs_[i]));
}

double StaticVTable::log_value(int n, int k) const {
  const auto i = index(n, k);
  return sign_[i] > 0 ? log_abs_[i] : std::nan("");
}

StaticVTable static_v_table(const ModelSpec& spec, int k_max) {
  if (spec.model_class() != ModelClass::static_mfm) {
    throw InvalidArgument("the V recursion only holds for a static gamma sequence");
  }
  if (k_max < 0) throw InvalidArgument("k_max must be non-negative");
  const int n_max = spec.n();
  k_max = std::min(k_max, n_max);
  const auto bound = truncation_bound(spec.prior_k(), 1, spec.trunc());

  StaticVTable t;
  t.n_max_ = n_max;
  t.k_max_ = k_max;
  t.digits_ = 2 * n_max + 40;
  const auto bits = static_cast<mpfr_prec_t>(std::ceil(t.digits_ * 3.3219280948873623));
  const std::size_t stride = k_max + 1;
  t.log_abs_.assign((n_max + 1) * stride, std::nan(""));
  t.sign_.assign((n_max + 1) * stride, 0);

  auto store = [&](int n, int k, const Mp& v) {
    const auto i = t.index(n, k);
    t.sign_[i] = static_cast<signed char>(mpfr_sgn(v.get()));
    if (t.sign_[i] == 0) return;
    Mp a(bits);
    mpfr_abs(a.get(), v.get(), MPFR_RNDN);
    mpfr_log(a.get(), a.get(), MPFR_RNDN);
    t.log_abs_[i] = mpfr_get_d(a.get(), MPFR_RNDN);
  };

  Mp gamma(bits), gk(bits), term(bits), lg(bits);
  mpfr_set_d(gamma.get(), spec.gammas().parameter(), MPFR_RNDN);
  int sign = 0;

  // Seed column V_{n,0} = sum_K p(K) Gamma(gamma K) / Gamma(gamma K + n).
  // p(K) enters as the same double the direct sum uses.
  std::vector<Mp> col(n_max + 1, Mp(bits));
  for (int K = spec.prior_k().support_min(); K <= bound.k_max; ++K) {
    const double log_p = log_pmf_k(spec.prior_k(), K);
    if (log_p == -INFINITY) continue;
    mpfr_mul_si(gk.get(), gamma.get(), K, MPFR_RNDN);
    Mp base(bits);
    mpfr_lgamma(base.get(), &sign, gk.get(), MPFR_RNDN);
    Mp p(bits);
    mpfr_set_d(p.get(), std::exp(log_p), MPFR_RNDN);
    for (int n = 0; n <= n_max; ++n) {
      mpfr_add_si(term.get(), gk.get(), n, MPFR_RNDN);
      mpfr_lgamma(lg.get(), &sign, term.get(), MPFR_RNDN);
      mpfr_sub(term.get(), base.get(), lg.get(), MPFR_RNDN);
      mpfr_exp(term.get(), term.get(), MPFR_RNDN);
      mpfr_mul(term.get(), term.get(), p.get(), MPFR_RNDN);
      mpfr_add(col[n].get(), col[n].get(), term.get(), MPFR_RNDN);
    }
  }
  for (int n = 0; n <= n_max; ++n) store(n, 0, col[n]);

  // Column k + 1 from column k; entry n + 1 needs col_k[n] and col_k[n + 1].
  std::vector<Mp> next(n_max + 1, Mp(bits));
  Mp coef(bits);
  for (int k = 0; k < k_max; ++k) {
    for (int n = k; n < n_max; ++n) {
      mpfr_div(term.get(), col[n].get(), gamma.get(), MPFR_RNDN);
      mpfr_set_si(coef.get(), n, MPFR_RNDN);
      mpfr_div(coef.get(), coef.get(), gamma.get(), MPFR_RNDN);
      mpfr_add_si(coef.get(), coef.get(), k, MPFR_RNDN);
      mpfr_mul(coef.get(), coef.get(), col[n + 1].get(), MPFR_RNDN);
      mpfr_sub(next[n + 1].get(), term.get(), coef.get(), MPFR_RNDN);
      store(n + 1, k + 1, next[n + 1]);
    }
    std::swap(col, next);
  }
  return t;
}

}  // namespace mixprior
