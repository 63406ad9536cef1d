// Scalar kernel: gamma-family primitives shared by every module.
//
// Everything downstream builds coefficients out of gamma ratios whose
// arguments routinely sit left of the imaginary axis, so the core object
// here is a signed log-gamma.  Values are assembled in log space and
// converted once, which keeps k<=30 coefficient tables inside double range
// even when individual gamma factors would overflow.

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace mkon {

inline constexpr double pi = 3.141592653589793238462643383279502884;

using cplx = std::complex<double>;

// Signed magnitude in log space.  sign==0 encodes an exact zero (log = -inf),
// which is what a reciprocal gamma produces at a pole.
struct SignedLog {
    double log_abs = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static SignedLog zero() { return {}; }
    static SignedLog one() { return {0.0, 1}; }
    static SignedLog from_value(double v);

    bool is_zero() const { return sign == 0; }
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    SignedLog operator*(const SignedLog& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return {log_abs + o.log_abs, sign * o.sign};
    }
    SignedLog operator/(const SignedLog& o) const {
        // division by an exact zero is a pole; callers never do this
        return {log_abs - o.log_abs, sign * o.sign};
    }
};

// sin(pi*x) with argument reduction done on x, not on pi*x.
double sinpi(double x);

// log|Gamma(x)| and the sign of Gamma(x), any real non-pole x.
// At a pole (x = 0, -1, -2, ...) returns sign 0 and +inf log.
SignedLog slog_gamma(double x);

// Gamma(x) as a plain double; NaN at poles, +-inf on overflow.
double gamma_r(double x);

// 1/Gamma(x); exactly 0 at poles.  This is the continuation workhorse.
double recip_gamma(double x);
SignedLog slog_recip_gamma(double x);

SignedLog slog_factorial(int n);
SignedLog slog_from_pow(double base, int n);  // base^n with sign tracking

double factorial(int n);       // n <= 170
double binomial(int n, int k); // exact for the ranges used here

// Rising factorial (a)_n by iterated product: exact zeros when a is a
// nonpositive integer inside the range, which terminating series rely on.
double pochhammer(double a, int n);
cplx pochhammer(const cplx& a, int n);

// Complex Gamma, Lanczos g=7 with reflection.
cplx cgamma(const cplx& z);

// Compensated (Neumaier) accumulator for alternating coefficient sums.
struct CompSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

// Terminating 2F1(-k, b; c; x) summed with compensation.
double hyp2f1_terminating(int k, double b, double c, double x);

// Terminating 2F0(-k, b; -; x).
double hyp2f0_terminating(int k, double b, double x);

// Bessel-type polynomial y_k(z; a, b) = 2F0(-k, k+a-1; -; -z/b).
double bessel_poly(int k, double a, double b, double z);

// Parameter ladder {(sigma+j)/u : j = 0..u-1} used by the multiplication
// formula Gamma(u*m + sigma)/Gamma(sigma) = u^{u*m} * prod_j ((sigma+j)/u)_m.
std::vector<double> delta_params(int u, double sigma);

double pow_int(double x, int n);

} // namespace mkon
