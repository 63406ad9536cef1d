#include "mkon/transform.hpp"

#include <cmath>

namespace mkon {

namespace {

// base^e for base > 0, log form
SignedLog slog_pow_real(double base, double e) {
    return {e * std::log(base), 1};
}

} // namespace

double laplace_z_termwise(int k, double p, double q, int ups, double a,
                          double w, double y) {
    BiPoly K = bivariate_MK(k, p, q, ups);
    CompSum acc;
    for (int l = 0; l <= k; l++) {
        for (int s = 0; s + l <= k; s++) {
            if (K.c_log[l][s].is_zero()) continue;
            // the gamma moment cancels the reciprocal gamma in the table;
            // composing in log space avoids the overflow/cancel pair
            SignedLog t = K.c_log[l][s] *
                          slog_gamma(double(ups) * s - p - q + 1.0) *
                          slog_from_pow(y, l) * slog_from_pow(w, ups * s) *
                          slog_pow_real(a, p + q - 1.0 - double(ups) * s);
            acc.add(t.value());
        }
    }
    return acc.value();
}

double laplace_z_closed(int k, double p, double q, int ups, double a,
                        double w, double y) {
    double au = std::pow(a, double(ups));
    double wu = std::pow(w, double(ups));
    double ratio = (wu - au) / au;
    return pochhammer(q + 1.0, k) * std::pow(a, p + q - 1.0) * pow_int(ratio, k) *
           hyp2f1_terminating(k, k + 1.0 - p, q + 1.0, y * au / (wu - au));
}

double laplace_z_Mform(int k, double p, double q, int ups, double a,
                       double w, double y) {
    double au = std::pow(a, double(ups));
    double wu = std::pow(w, double(ups));
    double ratio = (au - wu) / au;
    return std::pow(a, p + q - 1.0) * pow_int(ratio, k) *
           finite_M(k, p, q).eval(y * au / (au - wu));
}

double laplace_2d_termwise(int k, double p, double q, int ups, double a,
                           double b, double w1, double w2) {
    BiPoly K = bivariate_MK(k, p, q, ups);
    CompSum acc;
    for (int l = 0; l <= k; l++) {
        for (int s = 0; s + l <= k; s++) {
            if (K.c_log[l][s].is_zero()) continue;
            SignedLog t = K.c_log[l][s] * slog_gamma(q + l + 1.0) *
                          slog_gamma(double(ups) * s - p - q + 1.0) *
                          slog_from_pow(w1, l) * slog_from_pow(w2, ups * s) *
                          slog_pow_real(a, -(q + l + 1.0)) *
                          slog_pow_real(b, p + q - 1.0 - double(ups) * s);
            acc.add(t.value());
        }
    }
    return acc.value();
}

double laplace_2d_closed(int k, double p, double q, int ups, double a,
                         double b, double w1, double w2) {
    double bu = std::pow(b, double(ups));
    double w2u = std::pow(w2, double(ups));
    double ratio = (w2u - bu) / bu;
    SignedLog pre = slog_gamma(k + q + 1.0) * slog_pow_real(a, -(q + 1.0)) *
                    slog_pow_real(b, p + q - 1.0);
    return pre.value() * pow_int(ratio, k) *
           hyp2f0_terminating(k, k + 1.0 - p, w1 * bu / (a * (w2u - bu)));
}

double laplace_2d_bessel(int k, double p, double q, int ups, double a,
                         double b, double w1, double w2) {
    double bu = std::pow(b, double(ups));
    double w2u = std::pow(w2, double(ups));
    double ratio = (w2u - bu) / bu;
    SignedLog pre = slog_gamma(k + q + 1.0) * slog_pow_real(a, -(q + 1.0)) *
                    slog_pow_real(b, p + q - 1.0);
    return pre.value() * pow_int(ratio, k) *
           bessel_poly(k, 2.0 - p, 1.0, w1 * bu / (a * (bu - w2u)));
}

double rl_integral_monomial(double beta, double sigma, double a, double x) {
    SignedLog t = slog_gamma(beta + 1.0) * slog_recip_gamma(beta + sigma + 1.0) *
                  slog_pow_real(x - a, beta + sigma);
    return t.value();
}

double rl_derivative_monomial(double beta, double sigma, double a, double x) {
    SignedLog t = slog_gamma(beta + 1.0) * slog_recip_gamma(beta - sigma + 1.0) *
                  slog_pow_real(x - a, beta - sigma);
    return t.value();
}

namespace {

// Termwise (mu, lam) shift of the weighted family: mu, lam may be negative
// (derivative direction).  Evaluates at (x, zp) with x > a, zp > b.
double termwise_shift(int k, double p, double q, int ups, double mu,
                      double lam, double w1, double w2, double a, double b,
                      double x, double zp) {
    BiPoly K = bivariate_MK(k, p, q, ups);
    CompSum acc;
    for (int l = 0; l <= k; l++) {
        for (int s = 0; s + l <= k; s++) {
            if (K.c_log[l][s].is_zero()) continue;
            double by = q + l;
            double bz = double(ups) * s - p - q;
            SignedLog t = K.c_log[l][s] * slog_from_pow(w1, l) *
                          slog_from_pow(w2, ups * s);
            t = t * slog_gamma(by + 1.0) * slog_recip_gamma(by + mu + 1.0) *
                slog_pow_real(x - a, by + mu);
            t = t * slog_gamma(bz + 1.0) * slog_recip_gamma(bz + lam + 1.0) *
                slog_pow_real(zp - b, bz + lam);
            acc.add(t.value());
        }
    }
    return acc.value();
}

} // namespace

FracCheck frac_integral_shift(int k, double p, double q, int ups, double mu,
                              double lam, double w1, double w2, double a,
                              double b, double x, double zp) {
    FracCheck res;
    res.lhs = termwise_shift(k, p, q, ups, mu, lam, w1, w2, a, b, x, zp);
    SignedLog pre = slog_gamma(k + q + 1.0) * slog_recip_gamma(k + q + mu + 1.0) *
                    slog_pow_real(x - a, q + mu) *
                    slog_pow_real(zp - b, -(p + q) + lam);
    res.rhs = pre.value() * bivariate_MK(k, p - mu - lam, q + mu, ups)
                                .eval(w1 * (x - a), w2 * (zp - b));
    return res;
}

FracCheck frac_derivative_shift(int k, double p, double q, int ups, double mu,
                                double lam, double w1, double w2, double a,
                                double b, double x, double zp) {
    FracCheck res;
    res.lhs = termwise_shift(k, p, q, ups, -mu, -lam, w1, w2, a, b, x, zp);
    SignedLog pre = slog_gamma(k + q + 1.0) * slog_recip_gamma(k + q - mu + 1.0) *
                    slog_pow_real(x - a, q - mu) *
                    slog_pow_real(zp - b, -(p + q) - lam);
    res.rhs = pre.value() * bivariate_MK(k, p + mu + lam, q - mu, ups)
                                .eval(w1 * (x - a), w2 * (zp - b));
    return res;
}

double frac_round_trip_gap(int k, double p, double q, int ups, double mu,
                           double lam, double w1, double w2, double a,
                           double b, double x, double zp) {
    BiPoly K = bivariate_MK(k, p, q, ups);
    CompSum acc;
    for (int l = 0; l <= k; l++) {
        for (int s = 0; s + l <= k; s++) {
            if (K.c_log[l][s].is_zero()) continue;
            double by = q + l;
            double bz = double(ups) * s - p - q;
            SignedLog t = K.c_log[l][s] * slog_from_pow(w1, l) *
                          slog_from_pow(w2, ups * s);
            // I then D: the gamma ratios cancel analytically; composing them
            // numerically measures the round-trip noise
            t = t * slog_gamma(by + 1.0) * slog_recip_gamma(by + mu + 1.0);
            t = t * slog_gamma(by + mu + 1.0) * slog_recip_gamma(by + 1.0);
            t = t * slog_gamma(bz + 1.0) * slog_recip_gamma(bz + lam + 1.0);
            t = t * slog_gamma(bz + lam + 1.0) * slog_recip_gamma(bz + 1.0);
            t = t * slog_pow_real(x - a, by) * slog_pow_real(zp - b, bz);
            acc.add(t.value());
        }
    }
    double direct = termwise_shift(k, p, q, ups, 0.0, 0.0, w1, w2, a, b, x, zp);
    double denom = std::max({std::abs(direct), std::abs(acc.value()), 1e-300});
    return std::abs(acc.value() - direct) / denom;
}

double frac_integer_order_gap(int k, double p, double q, int ups, double w1,
                              double w2, double a, double b, double x,
                              double zp) {
    // mu = lam = 1 through the gamma route
    double viaGamma = termwise_shift(k, p, q, ups, 1.0, 1.0, w1, w2, a, b, x, zp);
    // plain antidifferentiation: divide each shifted monomial by its new
    // exponent, no gamma evaluation anywhere
    BiPoly K = bivariate_MK(k, p, q, ups);
    CompSum acc;
    for (int l = 0; l <= k; l++) {
        for (int s = 0; s + l <= k; s++) {
            if (K.c[l][s] == 0.0) continue;
            double by = q + l;
            double bz = double(ups) * s - p - q;
            double v = K.c[l][s] * pow_int(w1, l) * pow_int(w2, ups * s);
            v *= std::pow(x - a, by + 1.0) / (by + 1.0);
            v *= std::pow(zp - b, bz + 1.0) / (bz + 1.0);
            acc.add(v);
        }
    }
    double denom = std::max({std::abs(viaGamma), std::abs(acc.value()), 1e-300});
    return std::abs(viaGamma - acc.value()) / denom;
}

} // namespace mkon
