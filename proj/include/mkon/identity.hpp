// Identity engine: structural identities tying the bivariate family to its
// hypergeometric, Mittag-Leffler, and operational representations, plus the
// generating function and the differential-operator checks.

#pragma once

#include <array>

#include "mkon/poly.hpp"

namespace mkon {

// Double series  sum_{l,m} prod_i (num_i.a)_(num_i.th*l + num_i.ph*m)
//                        / (prod (den_l.a)_(den_l.th*l) prod (den_m.a)_(den_m.ph*m))
//                        * X^l T^m / (l! m!),
// summed over anti-diagonals with a five-quiet-diagonal stop.
struct SDSeriesSpec {
    struct NumEntry { double a; int th; int ph; };
    struct DenEntry { double a; int step; };
    std::vector<NumEntry> num;
    std::vector<DenEntry> den_l;
    std::vector<DenEntry> den_m;
    double X = 0.0, T = 0.0;
};

struct SeriesResult {
    double value = 0.0;
    long terms = 0;
    bool converged = true;
};

SeriesResult sd_series_eval(const SDSeriesSpec& spec);

// Terminating Karlsson-type rewrite of the bivariate family: the z power
// series regrouped through the multiplication formula into a product of
// ladder pochhammers.  Equals bivariate_MK(...).eval(y, z) identically.
double kdf_terminating(int k, double p, double q, int ups, double y, double z);

// Mittag-Leffler form: (-1)^k Gamma(k+q+1) E(-k; k+1-p | q+1, 1-p-q, u)(-y, z).
double ml_form(int k, double p, double q, int ups, double y, double z);

// Operational form: the inverse-derivative calculus applied to the seed
// y^q z^-(p+q) / (Gamma(q+1) Gamma(1-p-q)), reduced monomial by monomial.
// variant 0: hypergeometric arrangement of the series
// variant 1: Bessel-polynomial arrangement (same terms, different grouping)
double operational_rep_eval(int k, double p, double q, int ups, double y,
                            double z, int variant = 0);

// All four routes to the same value: direct, regrouped series,
// Mittag-Leffler, operational.
std::array<double, 4> four_way_eval(int k, double p, double q, int ups,
                                    double y, double z);

// --- generating function ----------------------------------------------------

struct GenFunResult {
    double lhs = 0.0; // partial sum over the family, k <= N
    double rhs = 0.0; // closed form: (1-w)^(p-1)/Gamma(1-p-q) * double series
    long terms = 0;
};

GenFunResult check_generating_function(double p, double q, int ups, double y,
                                       double z, double w, int N);

// --- differential operator checks -------------------------------------------

UniPoly poly_deriv(const UniPoly& g);
// (d/dz - 1)^n applied to a dense polynomial... coefficients exact in double.
UniPoly apply_D_minus_1_pow(const UniPoly& g, int n);

struct OperatorCheck {
    double residual = 0.0; // max |coefficient| of the difference
    double scale = 0.0;    // max |coefficient| seen on either side
};

// A := (D-1)^u (z D - z - u) g,  B := z (D-1)^(u+1) g; reports |A - B|.
// The two sides agree for every polynomial g; the check certifies the
// operator calculus rather than a property of the family.
OperatorCheck check_pde(const UniPoly& g, int ups);

// (D-1)^u z (D-1) g  vs  (z (D-1)^(u+1) + u (D-1)^u) g.
OperatorCheck check_lowering_identity(const UniPoly& g, int ups);

// --- transition relations -----------------------------------------------------

// Coefficient-level match of each z slice of bivariate_MK(k, p, q) against
// the scaled stride-u partner polynomial Z_(k-l)^(-p-q).
// Returns the worst relative coefficient deviation.
double mz_slice_deviation(int k, double p, double q, int ups);

// Value-level transition to the Jacobi-type family and its inverse.
double mj_forward_gap(int k, double p, double q, int ups, double y, double z);
double mj_inverse_gap(int k, double p, double q, int ups, double y, double z);

// z = 0 collapses: the bivariate tables reduce to the univariate families.
double mk_z0_gap(int k, double p, double q, int ups, double y);
double jk_z0_gap(int k, double p, double q, int ups, double y);

} // namespace mkon
