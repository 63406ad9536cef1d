// Fourier layer: closed-form transforms of the exponentially substituted
// weighted families, the direct panel-quadrature transforms they are checked
// against, and the frequency-side biorthogonality pairing.

#pragma once

#include <optional>
#include <string>

#include "mkon/poly.hpp"

namespace mkon {

// 2^(1/2-p-q-i x2) B(p+i x1, q-i x1) Gamma(1/2-p-q-i x2)
cplx G_factor(double p, double q, double x1, double x2);

// Frequency-side polynomial sum attached to the bivariate family.
cplx Psi1(int k, double p1, double q1, double alpha, double beta, int ups,
          double x1, double x2);

// Frequency-side sum attached to the companion family: an s-sum times a
// triple sum carrying the partner-polynomial tail.
cplx Psi2(int r, double p2, double q2, double gamma, double delta, int ups,
          double x1, double x2);

// Closed transforms of the two substituted weight functions.
cplx fourier_closed_left(int k, double p1, double q1, double alpha,
                         double beta, int ups, double x1, double x2);
cplx fourier_closed_right(int r, double p2, double q2, double gamma,
                          double delta, int ups, double x1, double x2);

// Direct transform: integral over R^2 of e^(-i(x1 y + x2 z)) times the
// substituted weight function, computed with composite Gauss-Legendre
// panels.  The integrand factors per monomial, so each panel-grid axis is
// integrated once.  Errors out when the integrand fails to decay (the
// monomial exponents must stay below the weight exponents).
struct DirectOpts {
    double panel_w = 0.35; // shrunk further for high frequencies
    int panel_pts = 16;
    double log_tail = 23.0; // decay_rate * L >= log_tail picks the cutoff
};

struct CplxResult {
    cplx value{0.0, 0.0};
    std::optional<std::string> error;
};

CplxResult fourier_direct_left(int k, double p1, double q1, double alpha,
                               double beta, int ups, double x1, double x2,
                               const DirectOpts& o = {});
CplxResult fourier_direct_right(int r, double p2, double q2, double gamma,
                                double delta, int ups, double x1, double x2,
                                const DirectOpts& o = {});

// --- frequency-side biorthogonality -----------------------------------------

struct XiQuadOpts {
    double L1 = 16.0, L2 = 26.0;
    double panel_w = 0.5;
    int panel_pts = 12;
};

struct BiorthResult {
    cplx lhs{0.0, 0.0}; // frequency-side double integral
    double rhs = 0.0;   // claimed closed value (0 off the diagonal)
};

// integral over xi of  Gamma(p1+i xi1) Gamma(p2-i xi1) Gamma(q1-i xi1)
//   Gamma(q2+i xi1) Gamma(1/2-p1-q1-i xi2) Gamma(1/2-p2-q2+i xi2)
//   * U1(xi) * U2(-xi)
// against 4 pi^2 k! Gamma(p1+q1) Gamma(p2+q2) Gamma(p1+p2+1-k)
//   / ((p1+p2-2k) Gamma(k+q1+q2) Gamma(p1+p2+q1+q2-k)) * delta_(k,r),
// with the family parameters tied as alpha = p1+p2+1, beta = q1+q2-1.
BiorthResult verify_fourier_biorthogonality(int k, int r, double p1, double q1,
                                            double p2, double q2, int ups,
                                            const XiQuadOpts& o = {});

double fourier_biorth_norm(int k, double p1, double q1, double p2, double q2);

// Plancherel-type consistency: position-side pairing of the two substituted
// weight functions against (2 pi)^-2 times the frequency-side pairing of
// their closed transforms.  The position side is the continued bivariate
// functional; the frequency side reuses the biorthogonality integrand.
struct ParsevalResult {
    double position = 0.0;
    cplx frequency{0.0, 0.0};
};

ParsevalResult parseval_consistency(int k, int r, double p1, double q1,
                                    double p2, double q2, int ups,
                                    const XiQuadOpts& o = {});

// min over a 20x20 grid of the rational-exponential weight; positive iff the
// weight is a genuine measure on the quadrant.
double weight_min_on_grid(double p, double q, double ymax = 4.0,
                          double zmax = 4.0, int n = 20);

// |Gamma(sigma + i t)| / (sqrt(2 pi) |t|^(sigma-1/2) e^(-pi |t| / 2)):
// approaches 1 from below as |t| grows; certifies the decay used to pick
// the frequency cutoffs.
double gamma_decay_ratio(double sigma, double t);

} // namespace mkon
