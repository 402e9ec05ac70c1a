#pragma once

#include <complex>

#include <gmpxx.h>

namespace ddhooks {

using Real = long double;
using Complex = std::complex<long double>;

/* Real dilogarithm on [-1, 1]. */
Real dilog(Real z);
/* Dilogarithm by its defining series; requires |w| < 1. */
Complex dilog_series(Complex w);

/* Constants of the dd_t(2n;x) main term; require 0 < x < sqrt 2. */
Real c_fn(Real x);
Real b_fn(Real x);
Real a_fn(int t, Real x);
/* Constants of the hat main term; require 0 < x < 2. */
Real c_hat(Real x);
Real a_hat(int t, Real x);

struct AsymptoticEstimate {
    Real value = 0;      // may overflow to inf; log_value is authoritative
    Real log_value = 0;
    int n = 0;
    Real claimed_error_exponent = -0.5L;
};

bool dd_hypothesis_holds(int t, Real x);
bool ddhat_hypothesis_holds(int t, Real x);

/* a(x) c(x)^{1/4} n^{-3/4} exp(sqrt(2 c(x) n)); HypothesisViolated outside the proven range. */
AsymptoticEstimate dd_asymptotic(int t, int n, Real x);
/* Same main term with only the domain checked. */
AsymptoticEstimate dd_main_term(int t, int n, Real x);
AsymptoticEstimate ddhat_asymptotic(int t, int n, Real x);
AsymptoticEstimate ddhat_main_term(int t, int n, Real x);

/* Number of strict partitions of n with `terms` (1..3) terms of the correction series. */
Real log_q_n_asymptotic(int n, int terms = 3);
Real q_n_asymptotic(int n, int terms = 3);

/* Three-term expansions of the first and second moments m_{k,t}(2n), k = 1 or 2. */
Real log_moment_asymptotic(int t, int n, int k);
Real moment_asymptotic(int t, int n, int k);

struct MeanVariance {
    Real mean = 0;
    Real variance = 0;
};
/* Mean and variance of n_t (or n-hat_t) over doubled distinct partitions of 2n. */
MeanVariance mean_var_asymptotic(int t, int n, bool hat);

/* q = exp(2 pi i (h + i z) / k) with gcd(h,k) = 1, 0 <= h < k, Re z > 0. */
struct RootOfUnityContext {
    int h = 0;
    int k = 1;
    int t = 1;
    Complex z{0.01L, 0};

    int d() const;
    void validate() const;
};

/* Log (Xq^t;q^t), Log (Xq^t;q^{2t}) and Log (X;-q^t). */
enum class ProductForm { QT_QT, QT_Q2T, X_MINUSQT };

/* Pole and constant terms of the expansion near the root of unity. */
Complex log_pochhammer_expansion(const RootOfUnityContext& ctx, Real X, ProductForm form);
/*
 * Variant whose pole for (X;-q^t) with k/d even is -d^2[3Li2(X^{k/d}) - 4Li2((-X)^{k/2d})]/(4 pi t k z);
 * it differs from the expansion above only in that case.
 */
Complex log_pochhammer_expansion_printed(const RootOfUnityContext& ctx, Real X, ProductForm form);
/* Pole term written as a sum of Li2 over the individual roots of unity. */
Complex log_pochhammer_expansion_generic(const RootOfUnityContext& ctx, Real X, ProductForm form);
/* Sum of principal logs of the factors, truncated once they drop below 1e-22. */
Complex log_pochhammer_direct(const RootOfUnityContext& ctx, Real X, ProductForm form);

Real dedekind_sum(int h, int k);
Complex dedekind_multiplier(int h, int k);

enum class ArcBranch { Alpha, BetaPlus, BetaMinus };

/*
 * alpha_j(x,h,k) (odd t) or beta_j^{+-}(x,h,k) (even t) for j in {0,1}.
 * ParityError for even k.
 */
Complex dominant_arc_constant(int t, Real x, int h, int k, int j, ArcBranch branch);
/* Closed-form magnitude of the same constant. */
Real dominant_arc_magnitude(int t, Real x, int j, ArcBranch branch);

/* |(q1;q1) - omega sqrt z e^{pi/(12k)(1/z - z)} (q;q)| with `terms` factors per product. */
Real eta_transform_check(int h, int k, Complex z, int terms = 400);

Real log_of(const mpz_class& v);
Real log_of(const mpq_class& v);

}  // namespace ddhooks
