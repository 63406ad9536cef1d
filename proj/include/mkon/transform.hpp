// Transform engine: Laplace images of the bivariate family (closed forms and
// the termwise gamma-moment route) and Riemann-Liouville fractional shifts.

#pragma once

#include <optional>
#include <string>

#include "mkon/poly.hpp"

namespace mkon {

// L_z { z^-(p+q) K(y, w z) }(a): the z transform of the weighted family,
// taken termwise through Gamma moments.  Keeps y as a free variable.
double laplace_z_termwise(int k, double p, double q, int ups, double a,
                          double w, double y);

// Closed form: (q+1)_k a^(p+q-1) ((w^u - a^u)/a^u)^k
//              * 2F1(-k, k+1-p; q+1; y a^u / (w^u - a^u)).
double laplace_z_closed(int k, double p, double q, int ups, double a,
                        double w, double y);

// Same value arranged around the univariate family:
// a^(p+q-1) ((a^u - w^u)/a^u)^k M_k^(p,q)(y a^u / (a^u - w^u)).
double laplace_z_Mform(int k, double p, double q, int ups, double a,
                       double w, double y);

// Full 2D transform L_y L_z { y^q z^-(p+q) K(w1 y, w2 z) }(a, b).
double laplace_2d_termwise(int k, double p, double q, int ups, double a,
                           double b, double w1, double w2);

// Gamma(k+q+1) / (a^(q+1) b^(1-p-q)) ((w2^u - b^u)/b^u)^k
//   * 2F0(-k, k+1-p; -; w1 b^u / (a (w2^u - b^u))).
double laplace_2d_closed(int k, double p, double q, int ups, double a,
                         double b, double w1, double w2);

// The 2F0 read as a Bessel-type polynomial y_k(.; 2-p, 1).
double laplace_2d_bessel(int k, double p, double q, int ups, double a,
                         double b, double w1, double w2);

// --- Riemann-Liouville monomial actions --------------------------------------

// I^sigma_(a+) (x-a)^beta = Gamma(beta+1)/Gamma(beta+sigma+1) (x-a)^(beta+sigma)
double rl_integral_monomial(double beta, double sigma, double a, double x);
// D^sigma_(a+) (x-a)^beta = Gamma(beta+1)/Gamma(beta-sigma+1) (x-a)^(beta-sigma);
// the reciprocal gamma supplies the exact zeros at the poles.
double rl_derivative_monomial(double beta, double sigma, double a, double x);

// --- fractional shift checks --------------------------------------------------

// Termwise application of I^mu (in y, base a) and I^lam (in z, base b) to
//   (y-a)^q (z-b)^-(p+q) K^(p,q)(w1 (y-a), w2 (z-b)),
// evaluated at (x, zp), against the claimed parameter-shifted closed form
//   Gamma(k+q+1)/Gamma(k+q+mu+1) (x-a)^(q+mu) (zp-b)^(-(p+q)+lam)
//   * K^(p-mu-lam, q+mu)(w1 (x-a), w2 (zp-b)).
struct FracCheck {
    double lhs = 0.0; // termwise transform of the left-hand side
    double rhs = 0.0; // parameter-shifted closed form as claimed
};

FracCheck frac_integral_shift(int k, double p, double q, int ups, double mu,
                              double lam, double w1, double w2, double a,
                              double b, double x, double zp);

// Derivative version: parameters shift to (p+mu+lam, q-mu) with prefactor
// Gamma(k+q+1)/Gamma(k+q-mu+1) and powers (x-a)^(q-mu) (zp-b)^(-(p+q)-lam).
FracCheck frac_derivative_shift(int k, double p, double q, int ups, double mu,
                                double lam, double w1, double w2, double a,
                                double b, double x, double zp);

// D^(mu,lam) after I^(mu,lam), termwise: must reproduce the original
// weighted polynomial pointwise.  Returns the relative gap at (x, zp).
double frac_round_trip_gap(int k, double p, double q, int ups, double mu,
                           double lam, double w1, double w2, double a,
                           double b, double x, double zp);

// mu = lam = 1 termwise against plain antidifferentiation (no gamma calls).
double frac_integer_order_gap(int k, double p, double q, int ups, double w1,
                              double w2, double a, double b, double x,
                              double zp);

} // namespace mkon
