#include "ddhooks/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "ddhooks/error.hpp"

namespace ddhooks {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;
constexpr Real kEps = 1e-22L;

/* zeta_k^m with the exponent reduced exactly. */
Complex root_of_unity(long m, long k) {
    const long r = ((m % k) + k) % k;
    const Real angle = 2 * kPi * static_cast<Real>(r) / static_cast<Real>(k);
    return {std::cos(angle), std::sin(angle)};
}

Real dilog_small(Real z) {
    // |z| <= 1/2
    Real sum = 0, p = z;
    for (int n = 1; n < 200; ++n) {
        const Real term = p / (static_cast<Real>(n) * n);
        sum += term;
        if (std::fabs(term) < 1e-24L) break;
        p *= z;
    }
    return sum;
}

Real ipow(Real x, int e) {
    Real r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

void require_t(int t) {
    if (t < 1) throw InvalidArgument("t must be positive", std::to_string(t));
}

void require_n(int n) {
    if (n < 1) throw InvalidArgument("n must be positive", std::to_string(n));
}

AsymptoticEstimate estimate(Real log_value, int n) {
    AsymptoticEstimate e;
    e.log_value = log_value;
    e.value = std::exp(log_value);
    e.n = n;
    return e;
}

/* (1/2 - l/k) Log(1 - X zeta_k^{h t l}) summed over l = 1..k. */
Complex finite_sum_qt(const RootOfUnityContext& c, Real X) {
    Complex s = 0;
    for (int l = 1; l <= c.k; ++l) {
        const Real w = 0.5L - static_cast<Real>(l) / c.k;
        s += w * std::log(Real(1) - X * root_of_unity(static_cast<long>(c.h) * c.t * l, c.k));
    }
    return s;
}

Complex finite_sum_q2t(const RootOfUnityContext& c, Real X) {
    Complex s = 0;
    for (int l = 1; l <= c.k; ++l) {
        const Real w = 0.5L - static_cast<Real>(2 * l - 1) / (2 * c.k);
        s += w * std::log(Real(1) - X * root_of_unity(static_cast<long>(c.h) * c.t * (2 * l - 1), c.k));
    }
    return s;
}

Complex finite_sum_minus(const RootOfUnityContext& c, Real X) {
    Complex s = std::log(Complex(1 - X));
    for (int l = 1; l <= 2 * c.k; ++l) {
        const Real w = 0.5L - static_cast<Real>(l) / (2 * c.k);
        const Real sign = (l % 2 == 0) ? 1 : -1;
        s += w * std::log(Real(1) - sign * X * root_of_unity(static_cast<long>(c.h) * c.t * l, c.k));
    }
    return s;
}

Complex expansion(const RootOfUnityContext& ctx, Real X, ProductForm form, bool printed) {
    ctx.validate();
    if (!(std::fabs(X) < 1)) throw DomainError("expansion needs |X| < 1", std::to_string(static_cast<double>(X)));
    const int d = ctx.d();
    const int kd = ctx.k / d;
    const Real d2 = static_cast<Real>(d) * d;
    const Complex tkz = static_cast<Real>(ctx.t) * ctx.k * ctx.z;
    switch (form) {
        case ProductForm::QT_QT:
            return -d2 * dilog(ipow(X, kd)) / (2 * kPi * tkz) + finite_sum_qt(ctx, X);
        case ProductForm::QT_Q2T:
            if (kd % 2 == 1) return -d2 * dilog(ipow(X, kd)) / (4 * kPi * tkz) + finite_sum_q2t(ctx, X);
            return -d2 * (dilog(ipow(X, kd)) - 2 * dilog(ipow(X, kd / 2))) / (2 * kPi * tkz) +
                   finite_sum_q2t(ctx, X);
        case ProductForm::X_MINUSQT:
            if (kd % 2 == 1) return -d2 * dilog(ipow(X, 2 * kd)) / (8 * kPi * tkz) + finite_sum_minus(ctx, X);
            if (printed)
                return -d2 * (3 * dilog(ipow(X, kd)) - 4 * dilog(ipow(-X, kd / 2))) / (4 * kPi * tkz) +
                       finite_sum_minus(ctx, X);
            return -d2 * (2 * dilog(ipow(X, kd)) + 4 * dilog(ipow(X, kd / 2)) - 4 * dilog(ipow(-X, kd / 2))) /
                       (4 * kPi * tkz) +
                   finite_sum_minus(ctx, X);
    }
    throw InvalidArgument("unknown product form");
}

/* Principal branch of prod (1 - X zeta) factor powers. */
Complex cpow_real(Complex base, Real e) { return std::exp(e * std::log(base)); }

}  // namespace

Real dilog(Real z) {
    if (std::isnan(z) || z < -1 || z > 1) throw DomainError("dilog argument outside [-1, 1]", std::to_string(static_cast<double>(z)));
    if (z == 1) return kPi * kPi / 6;
    if (z > 0.5L) return kPi * kPi / 6 - std::log(z) * std::log1p(-z) - dilog_small(1 - z);
    if (z < -0.5L) {
        // Li2(z) + Li2(z/(z-1)) = -log^2(1-z)/2 with z/(z-1) in (1/3, 1/2].
        const Real l = std::log1p(-z);
        return -0.5L * l * l - dilog_small(z / (z - 1));
    }
    return dilog_small(z);
}

Complex dilog_series(Complex w) {
    if (!(std::abs(w) < 1)) throw DomainError("series dilog needs |w| < 1");
    Complex sum = 0, p = w;
    const Real r = std::abs(w);
    for (int n = 1; n < 100000; ++n) {
        sum += p / static_cast<Real>(static_cast<Real>(n) * n);
        if (std::pow(r, n) / (static_cast<Real>(n) * n) < 1e-24L) break;
        p *= w;
    }
    return sum;
}

Real c_fn(Real x) {
    if (!(x > 0 && x * x < 2)) throw DomainError("c(x) needs |1 - x^2| < 1", std::to_string(static_cast<double>(x)));
    return kPi * kPi / 6 - dilog(1 - x * x);
}

Real b_fn(Real x) {
    if (!(x > 0 && x * x < 2)) throw DomainError("b(x) needs |1 - x^2| < 1", std::to_string(static_cast<double>(x)));
    const Complex r = std::sqrt(Complex((1 - x) / (1 + x)));
    const Complex s = std::sqrt(Complex(1 - x * x));
    const Complex v = (Real(1) + r) * std::sqrt(Real(1) - s) + (Real(1) - r) * std::sqrt(Real(1) + s);
    return v.real();
}

Real a_fn(int t, Real x) {
    require_t(t);
    if (!(x > 0 && x * x < 2)) throw DomainError("a(x) needs |1 - x^2| < 1", std::to_string(static_cast<double>(x)));
    const Real sp = std::sqrt(kPi);
    if (t % 2 == 1) return 1 / (std::pow(Real(2), 0.75L) * sp * std::pow(x, (t - 1) / 2.0L) * (1 + x));
    return b_fn(x) / (std::pow(Real(2), 1.75L) * sp * std::pow(x, t / 2.0L) * (1 + x));
}

Real c_hat(Real x) {
    if (!(x > 0 && x < 2)) throw DomainError("c-hat needs |1 - x| < 1", std::to_string(static_cast<double>(x)));
    return kPi * kPi / 6 - dilog(1 - x);
}

Real a_hat(int t, Real x) {
    require_t(t);
    if (!(x > 0 && x < 2)) throw DomainError("a-hat needs |1 - x| < 1", std::to_string(static_cast<double>(x)));
    const Real sp = std::sqrt(kPi);
    if (t % 2 == 1) return 1 / (std::pow(Real(2), 1.75L) * sp * std::pow(x, (t - 1) / 4.0L));
    const Complex s = std::sqrt(Complex(1 - x));
    const Real num = (std::sqrt(Real(1) + s) + std::sqrt(Real(1) - s)).real();
    return num / (std::pow(Real(2), 2.75L) * sp * std::pow(x, t / 4.0L));
}

bool dd_hypothesis_holds(int t, Real x) {
    require_t(t);
    if (!(x > 0 && x * x < 2)) return false;
    return dilog(1 - x * x) < kPi * kPi / (12.0L * t * t);
}

bool ddhat_hypothesis_holds(int t, Real x) {
    require_t(t);
    if (!(x > 0 && x < 2)) return false;
    return dilog(1 - x) < kPi * kPi / (12.0L * t * t);
}

AsymptoticEstimate dd_main_term(int t, int n, Real x) {
    require_n(n);
    const Real c = c_fn(x);
    const Real nn = n;
    return estimate(std::log(a_fn(t, x)) + 0.25L * std::log(c) - 0.75L * std::log(nn) + std::sqrt(2 * c * nn), n);
}

AsymptoticEstimate dd_asymptotic(int t, int n, Real x) {
    if (!dd_hypothesis_holds(t, x))
        throw HypothesisViolated("needs |1 - x^2| < 1 and Li2(1 - x^2) < pi^2/(12 t^2)",
                                 "t=" + std::to_string(t) + " x=" + std::to_string(static_cast<double>(x)));
    return dd_main_term(t, n, x);
}

AsymptoticEstimate ddhat_main_term(int t, int n, Real x) {
    require_n(n);
    const Real c = c_hat(x);
    const Real nn = n;
    return estimate(std::log(a_hat(t, x)) + 0.25L * std::log(c) - 0.75L * std::log(nn) + std::sqrt(2 * c * nn), n);
}

AsymptoticEstimate ddhat_asymptotic(int t, int n, Real x) {
    if (!ddhat_hypothesis_holds(t, x))
        throw HypothesisViolated("needs |1 - x| < 1 and Li2(1 - x) < pi^2/(12 t^2)",
                                 "t=" + std::to_string(t) + " x=" + std::to_string(static_cast<double>(x)));
    return ddhat_main_term(t, n, x);
}

Real log_q_n_asymptotic(int n, int terms) {
    require_n(n);
    if (terms < 1 || terms > 3) throw InvalidArgument("terms must be 1, 2 or 3", std::to_string(terms));
    const Real nn = n;
    Real bracket = 1;
    if (terms >= 2) bracket += (kPi / 48 - 9 / (8 * kPi)) / std::sqrt(3 * nn);
    if (terms >= 3) bracket += (kPi * kPi / 4608 - 15.0L / 128 - 135 / (128 * kPi * kPi)) / (3 * nn);
    return -std::log(4 * std::pow(Real(3), 0.25L)) - 0.75L * std::log(nn) + kPi * std::sqrt(nn / 3) +
           std::log(bracket);
}

Real q_n_asymptotic(int n, int terms) { return std::exp(log_q_n_asymptotic(n, terms)); }

Real log_moment_asymptotic(int t, int n, int k) {
    require_t(t);
    require_n(n);
    const Real nn = n, tt = t;
    const Real de = (t % 2 == 0) ? 1 : 0;
    const Real r3n = std::sqrt(3 * nn);
    const Real pi2 = kPi * kPi;
    if (k == 1) {
        const Real e = 1 - 12 * tt + 6 * de;
        const Real b = 1 + (3 / (8 * kPi) + kPi * e / 48) / r3n +
                       (81 / (128 * pi2) - 3 * e / 128 + pi2 * (1 + 12 * de - 24 * tt + 96 * tt * tt) / 4608) /
                           (3 * nn);
        return std::log(std::pow(Real(3), 0.25L) / (2 * kPi)) - 0.25L * std::log(nn) + kPi * std::sqrt(nn / 3) +
               std::log(b);
    }
    if (k == 2) {
        const Real e = 24 * tt - 25 - 12 * de;
        const Real b =
            1 - (9 / (8 * kPi) + kPi * e / 48) / r3n -
            (135 / (128 * pi2) + e / 128 + pi2 * (239 + 48 * de + 48 * tt + 288 * tt * de - 480 * tt * tt) / 4608) /
                (3 * nn);
        return std::log(std::pow(Real(3), 0.75L) / pi2) + 0.25L * std::log(nn) + kPi * std::sqrt(nn / 3) +
               std::log(b);
    }
    throw InvalidArgument("moment order must be 1 or 2", std::to_string(k));
}

Real moment_asymptotic(int t, int n, int k) { return std::exp(log_moment_asymptotic(t, n, k)); }

MeanVariance mean_var_asymptotic(int t, int n, bool hat) {
    require_t(t);
    require_n(n);
    const Real r = std::sqrt(3 * static_cast<Real>(n));
    const Real de = (t % 2 == 0) ? 1 : 0;
    const Real pi2 = kPi * kPi, pi3 = pi2 * kPi, pi4 = pi2 * pi2;
    MeanVariance mv;
    if (!hat) {
        mv.mean = 2 * r / kPi + 3 / pi2 - t / 2.0L + de / 4;
        mv.variance = 2 * (pi2 - 6) / pi3 * r - 36 / pi4 + 3 / pi2 - 0.25L - de / 8;
    } else {
        mv.mean = r / kPi + 3 / (2 * pi2) - t / 4.0L + 0.25L - de / 8;
        mv.variance = (pi2 - 6) / (2 * pi3) * r - 9 / pi4 + 3 / (4 * pi2) + de / 32;
    }
    return mv;
}

int RootOfUnityContext::d() const { return std::gcd(t, k); }

void RootOfUnityContext::validate() const {
    if (k < 1 || h < 0 || h >= k || std::gcd(h, k) != 1)
        throw InvalidArgument("need 0 <= h < k with gcd(h,k) = 1", std::to_string(h) + "/" + std::to_string(k));
    if (t < 1) throw InvalidArgument("t must be positive", std::to_string(t));
    if (!(z.real() > 0)) throw DomainError("Re z must be positive");
}

Complex log_pochhammer_expansion(const RootOfUnityContext& ctx, Real X, ProductForm form) {
    return expansion(ctx, X, form, false);
}

Complex log_pochhammer_expansion_printed(const RootOfUnityContext& ctx, Real X, ProductForm form) {
    return expansion(ctx, X, form, true);
}

Complex log_pochhammer_expansion_generic(const RootOfUnityContext& ctx, Real X, ProductForm form) {
    ctx.validate();
    if (!(std::fabs(X) < 1)) throw DomainError("expansion needs |X| < 1");
    const long ht = static_cast<long>(ctx.h) * ctx.t;
    const Complex tz = static_cast<Real>(ctx.t) * ctx.z;
    Complex pole = 0;
    switch (form) {
        case ProductForm::QT_QT:
            for (int l = 1; l <= ctx.k; ++l) pole -= dilog_series(X * root_of_unity(ht * l, ctx.k));
            return pole / (2 * kPi * tz) + finite_sum_qt(ctx, X);
        case ProductForm::QT_Q2T:
            for (int l = 1; l <= ctx.k; ++l) pole -= dilog_series(X * root_of_unity(ht * (2 * l - 1), ctx.k));
            return pole / (4 * kPi * tz) + finite_sum_q2t(ctx, X);
        case ProductForm::X_MINUSQT:
            for (int l = 1; l <= ctx.k; ++l) {
                pole -= dilog_series(X * root_of_unity(2 * ht * l, ctx.k));
                pole -= dilog_series(-X * root_of_unity(ht * (2 * l - 1), ctx.k));
            }
            return pole / (4 * kPi * tz) + finite_sum_minus(ctx, X);
    }
    throw InvalidArgument("unknown product form");
}

Complex log_pochhammer_direct(const RootOfUnityContext& ctx, Real X, ProductForm form) {
    ctx.validate();
    if (!(std::fabs(X) < 1)) throw DomainError("direct product needs |X| < 1");
    const long k = ctx.k;
    const long ht = static_cast<long>(ctx.h) * ctx.t;
    Complex sum = 0;
    // q^m = zeta_k^{hm} exp(-2 pi z m / k)
    auto factor = [&](long m, long extra_half_turns) {
        const Complex damp = std::exp(-2 * kPi * ctx.z * static_cast<Real>(m) / static_cast<Real>(k));
        // phase exp(2 pi i (h m / k + extra/2)) reduced over the denominator 2k
        const Complex phase = root_of_unity(2 * (ctx.h * m % (2 * k)) + extra_half_turns * k, 2 * k);
        sum += std::log(Real(1) - X * phase * damp);
        return std::abs(X) * std::abs(damp);
    };
    (void)ht;
    switch (form) {
        case ProductForm::QT_QT:
            for (long n = 1;; ++n)
                if (factor(static_cast<long>(ctx.t) * n, 0) < kEps) break;
            break;
        case ProductForm::QT_Q2T:
            for (long n = 0;; ++n)
                if (factor(static_cast<long>(ctx.t) * (2 * n + 1), 0) < kEps) break;
            break;
        case ProductForm::X_MINUSQT:
            sum += std::log(Complex(1 - X));
            for (long n = 1;; ++n)
                if (factor(static_cast<long>(ctx.t) * n, n % 2) < kEps) break;
            break;
    }
    return sum;
}

Real dedekind_sum(int h, int k) {
    if (k < 1 || std::gcd(h, k) != 1) throw InvalidArgument("dedekind sum needs gcd(h,k) = 1");
    auto saw = [](long num, long den) -> Real {
        const long r = ((num % den) + den) % den;
        if (r == 0) return 0;
        return static_cast<Real>(r) / den - 0.5L;
    };
    Real s = 0;
    for (long mu = 1; mu < k; ++mu) s += saw(mu, k) * saw(static_cast<long>(h) * mu, k);
    return s;
}

Complex dedekind_multiplier(int h, int k) {
    const Real s = dedekind_sum(h, k);
    return std::polar(Real(1), kPi * s);
}

Complex dominant_arc_constant(int t, Real x, int h, int k, int j, ArcBranch branch) {
    require_t(t);
    if (k % 2 == 0) throw ParityError("dominant arc constants need odd k", std::to_string(k));
    if (h < 0 || h >= k || std::gcd(h, k) != 1) throw InvalidArgument("need 0 <= h < k coprime");
    if (j != 0 && j != 1) throw InvalidArgument("j must be 0 or 1");
    if (!(x > 0 && x * x < 2)) throw DomainError("dominant arc constants need 0 < x < sqrt 2");
    const bool alpha = branch == ArcBranch::Alpha;
    if (alpha != (t % 2 == 1)) throw InvalidArgument("alpha needs odd t, beta needs even t");

    const Real X = 1 - x * x;
    const long ht = static_cast<long>(h) * t;
    const Complex omega = dedekind_multiplier(h, k) / dedekind_multiplier(static_cast<int>((2L * h) % k), k);
    Complex prod = 1;
    const Real power = alpha ? (t - 1) / 2.0L : (t - 2) / 2.0L;
    for (int l = 1; l <= k; ++l) {
        prod *= cpow_real(Real(1) - X * root_of_unity(ht * l, k), power * (0.5L - static_cast<Real>(l) / k));
        prod *= cpow_real(Real(1) - X * root_of_unity(ht * (2 * l - j), k),
                          0.5L - static_cast<Real>(2 * l - j) / (2 * k));
    }
    if (alpha) return omega / std::sqrt(Real(2)) * (std::pow(x, 1 - j) / (1 + x)) * prod;

    const Real s = branch == ArcBranch::BetaPlus ? 1 : -1;
    const Complex r = std::sqrt(Complex((1 - x) / (1 + x)));
    const Complex sq = std::sqrt(Complex(X));
    // zeta_k^{h t l / 2} = exp(pi i h t l / k)
    for (int l = 1; l <= 2 * k; ++l) {
        const Real sign = (l % 2 == 0) ? 1 : -1;
        prod *= cpow_real(Real(1) - s * sign * sq * root_of_unity(ht * l, 2L * k),
                          0.5L - static_cast<Real>(l) / (2 * k));
    }
    return omega / (2 * std::sqrt(Real(2)) * std::pow(x, j) * (1 + x)) * (Real(1) + s * r) * (Real(1) - s * sq) *
           prod;
}

Real dominant_arc_magnitude(int t, Real x, int j, ArcBranch branch) {
    require_t(t);
    (void)j;
    if (!(x > 0 && x * x < 2)) throw DomainError("dominant arc constants need 0 < x < sqrt 2");
    if (branch == ArcBranch::Alpha) return 1 / (std::sqrt(Real(2)) * std::pow(x, (t - 1) / 2.0L) * (1 + x));
    const Real s = branch == ArcBranch::BetaPlus ? 1 : -1;
    const Complex r = std::sqrt(Complex((1 - x) / (1 + x)));
    const Complex sq = std::sqrt(Complex(1 - x * x));
    return std::abs(Real(1) + s * r) * std::sqrt(std::abs(Real(1) - s * sq)) /
           (2 * std::sqrt(Real(2)) * std::pow(x, t / 2.0L) * (1 + x));
}

Real eta_transform_check(int h, int k, Complex z, int terms) {
    if (k < 1 || h < 0 || h >= k || std::gcd(h, k) != 1) throw InvalidArgument("need 0 <= h < k coprime");
    if (!(z.real() > 0)) throw DomainError("Re z must be positive");
    int hp = 0;
    if (k > 1) {
        while ((static_cast<long>(h) * hp + 1) % k != 0) ++hp;
    }
    // q = exp(2 pi i (h + i z)/k), q1 = exp(2 pi i (h' + i/z)/k)
    const Complex I(0, 1);
    const Complex q = std::exp(2 * kPi * I * (static_cast<Real>(h) + I * z) / static_cast<Real>(k));
    const Complex q1 = std::exp(2 * kPi * I * (static_cast<Real>(hp) + I / z) / static_cast<Real>(k));
    auto euler = [terms](Complex w) {
        Complex p = 1, wn = w;
        for (int n = 1; n <= terms; ++n) {
            p *= Real(1) - wn;
            wn *= w;
        }
        return p;
    };
    const Complex rhs = dedekind_multiplier(h, k) * std::sqrt(z) *
                        std::exp(kPi / (12 * static_cast<Real>(k)) * (Real(1) / z - z)) * euler(q);
    return std::abs(euler(q1) - rhs);
}

Real log_of(const mpz_class& v) {
    if (sgn(v) <= 0) throw DomainError("log of a non-positive integer");
    long e = 0;
    const double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(static_cast<Real>(m)) + static_cast<Real>(e) * std::log(Real(2));
}

Real log_of(const mpq_class& v) {
    if (sgn(v) <= 0) throw DomainError("log of a non-positive rational");
    return log_of(v.get_num()) - log_of(v.get_den());
}

}  // namespace ddhooks
