// Gaussian rules (Golub-Welsch via a symmetric tridiagonal eigensolve) and
// the integral functionals used to certify orthogonality claims.
//
// Two evaluation regimes appear throughout:
//   - plain quadrature where the measure is integrable as written,
//   - continued functionals where e^{-z} z^a moments (or Beta moments) are
//     replaced by their gamma-function values, valid for any non-pole a.

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "mkon/poly.hpp"

namespace mkon {

struct QuadRule {
    std::vector<double> x, w;
};

// Weight (1-x)^a (1+x)^b on (-1, 1); requires a, b > -1.
QuadRule gauss_jacobi(int n, double a, double b);
// Weight t^b (1-t)^a on (0, 1).
QuadRule gauss_jacobi01(int n, double a, double b);
// Weight x^alpha e^-x on (0, inf); requires alpha > -1.
QuadRule gauss_laguerre(int n, double alpha);
// Legendre on (-1, 1).
QuadRule gauss_legendre(int n);

double integrate(const QuadRule& r, const std::function<double(double)>& f);

// integral_0^inf y^q (1+y)^-(p+q) g(y) dy for a dense polynomial g.
// Exact (up to rounding) once the rule order covers deg(g); the substitution
// y = t/(1-t) turns the weight into t^q (1-t)^(p-2-deg).  Fails when the
// integrand decays too slowly: needs p > deg(g) + 1.
struct MWeightResult {
    double value = 0.0;
    std::optional<std::string> error;
};
MWeightResult integrate_M_weight(const UniPoly& g, double p, double q,
                                 int order = 0);

// Same integral for an arbitrary integrand, 80-point rule doubled until two
// consecutive refinements agree to 1e-11 (relative) or 640 points.
MWeightResult integrate_M_weight_adaptive(const std::function<double(double)>& f,
                                          double p, double q);

// sum_j coef_j Gamma(a + stride*j + 1): the e^{-z} z^a moment functional
// continued in a.  This is how z-side integrals against z^-(p+q) e^-z are
// evaluated outside the literally convergent range.
double gamma_moment_functional(const UniPoly& g, double a);

// sum_j coef_j Gamma(q+j+1) Gamma(p-1-j) / Gamma(p+q): continued Beta
// moments of the rational weight.
double beta_moment_functional(const UniPoly& g, double p, double q);

// --- orthogonality checks --------------------------------------------------

struct PairCheck {
    double lhs = 0.0; // computed integral
    double rhs = 0.0; // claimed value (0 off the diagonal)
    std::optional<std::string> error;
};

// integral e^-y y^c Z_k(y) Y_r(y) dy  vs  Gamma(u*k+c+1)/k! * delta.
// order = 0 picks the minimal exact rule.  Requires c > -1; use
// konhauser_pair_functional below for continued c.
PairCheck verify_konhauser_biorthogonality(int k, int r, double c, int ups,
                                           int order = 0);

// Same pairing evaluated as a continued gamma functional (any non-pole c).
PairCheck konhauser_pair_functional(int k, int r, double c, int ups);

// integral y^q (1+y)^-(p+q) M_k M_r dy  vs
// k! Gamma(p-k) Gamma(q+k+1) / ((p-2k-1) Gamma(p+q-k)) * delta.
PairCheck verify_M_orthogonality(int k, int r, double p, double q,
                                 int order = 0);

double M_orthogonality_norm(int k, double p, double q);

// Bivariate pairing of bivariate_MK(k) against companion_MK(r) under
// y^q (1+y)^-(p+q) e^-z z^-(p+q).
//   Hybrid:    y by quadrature, z by the continued gamma functional.
//   Numeric:   both integrals by quadrature (needs p+q < 1 for the z side).
//   Continued: both sides as continued functionals (any admissible p, q).
enum class BiMode { Hybrid, Numeric, Continued };

PairCheck verify_MK_biorthogonality(int k, int r, double p, double q, int ups,
                                    BiMode mode, int order = 0);

} // namespace mkon
