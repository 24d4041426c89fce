#include "dcos/special_functions.hpp"

#include <cmath>
#include <limits>

#include "dcos/errors.hpp"

namespace dcos {

namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 500;

// Lower regularized incomplete gamma P(a, x) by power series; converges fast
// for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized incomplete gamma Q(a, x) by continued fraction (modified
// Lentz); converges fast for x >= a + 1.
double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for the regularized incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h;
}

double clamp01(double v) {
    if (v < 0.0) return 0.0;
    if (v > 1.0) return 1.0;
    return v;
}

}  // namespace

double regularized_gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) return std::numeric_limits<double>::quiet_NaN();
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return clamp01(1.0 - gamma_p_series(a, x));
    return clamp01(gamma_q_cf(a, x));
}

double regularized_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return clamp01(front * beta_cf(a, b, x) / a);
    return clamp01(1.0 - front * beta_cf(b, a, 1.0 - x) / b);
}

double chi2_sf(double x, int dof) {
    if (dof < 1) throw InvalidDof(dof);
    if (x <= 0.0) return 1.0;
    return regularized_gamma_q(0.5 * dof, 0.5 * x);
}

double kolmogorov_sf(double d, long long n) {
    if (d <= 0.0) return 1.0;
    if (n < 1) n = 1;
    const double t = std::sqrt(static_cast<double>(n)) * d;
    if (t < 1e-3) return 1.0;

    // The alternating series loses precision as t -> 0 (terms near 1 with
    // cancellation); below 0.18 the Jacobi-theta form of the same
    // distribution converges in a couple of terms.
    if (t < 0.18) {
        const double f = 2.50662827463100050242;  // sqrt(2*pi)
        double sum = 0.0;
        for (int k = 1; k <= 20; ++k) {
            const double m = 2.0 * k - 1.0;
            const double term = std::exp(-m * m * M_PI * M_PI / (8.0 * t * t));
            sum += term;
            if (term < 1e-16 * sum) break;
        }
        return clamp01(1.0 - f / t * sum);
    }

    double sum = 0.0;
    for (int k = 1; k <= 100000; ++k) {
        const double term = std::exp(-2.0 * static_cast<double>(k) * static_cast<double>(k) * t * t);
        sum += (k % 2 == 1) ? term : -term;
        if (term < 1e-12) break;
    }
    return clamp01(2.0 * sum);
}

double t_sf_two_sided(double t, int dof) {
    if (dof < 1) throw InvalidDof(dof);
    if (t == 0.0) return 1.0;
    const double nu = static_cast<double>(dof);
    const double x = nu / (nu + t * t);
    return clamp01(regularized_beta(0.5 * nu, 0.5, x));
}

}  // namespace dcos
