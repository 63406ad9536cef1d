// Polynomial families: the biorthogonal Konhauser pair, the finite rational
// family M, classical Jacobi, the bivariate pair built from them, and the
// bivariate Mittag-Leffler function that the bivariate family embeds into.
//
// Coefficients are assembled in signed log space and stored as doubles.
// Strides matter: several families are polynomials in z^u rather than z.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mkon/scalar.hpp"

namespace mkon {

// Dense polynomial in x^stride: value = sum_j coef[j] * x^(stride*j).
struct UniPoly {
    int stride = 1;
    std::vector<double> coef;

    int degree() const { return coef.empty() ? 0 : stride * int(coef.size() - 1); }
    double eval(double x) const;
    UniPoly dense() const; // stride-1 representation
};

UniPoly poly_mul(const UniPoly& a, const UniPoly& b);
UniPoly poly_add(const UniPoly& a, const UniPoly& b);
UniPoly poly_scale(const UniPoly& a, double s);

// Triangular coefficient table over monomials y^l z^(u*s), l + s <= k.
// For the Jacobi-type bivariate family the first argument is mapped to
// u = (1 - y)/2 before the table is applied.
enum class YMap { Direct, HalfOneMinus };

struct BiPoly {
    int k = 0;
    int ups = 1;
    YMap ymap = YMap::Direct;
    std::vector<std::vector<double>> c;        // c[l][s]
    std::vector<std::vector<SignedLog>> c_log; // same table, log form

    double eval(double y, double z) const;
    // z-polynomial multiplying y^l (after the y-map): stride = ups
    UniPoly z_slice(int l) const;
};

// Product form base(y) * tail(z) used by the companion family.
struct BiProduct {
    UniPoly base;
    UniPoly tail;
    double eval(double y, double z) const { return base.eval(y) * tail.eval(z); }
};

struct Params {
    int k = 0;
    double p = 0.0, q = 0.0;
    int ups = 1;
};

// Family admissibility.  Returns an error naming the violated constraint,
// or nullopt when the parameters are usable.
std::optional<std::string> validate_common(const Params& pr);
std::optional<std::string> validate_finite_family(const Params& pr); // adds p > 2k+1

// --- univariate families -------------------------------------------------

// Z_k^(c)(y; u): stride-u polynomial, degree u*k.
UniPoly konhauser_Z(int k, double c, int ups);

// Y_k^(c)(y; u): stride-1 polynomial, degree k, biorthogonal partner of Z.
UniPoly konhauser_Y(int k, double c, int ups);

// Finite family M_k^(p,q)(y): degree k, orthogonal for the rational weight
// y^q (1+y)^-(p+q) when p > 2k+1.
UniPoly finite_M(int k, double p, double q);

// Classical Jacobi P_k^(p,q)(y) as a dense polynomial in y.
UniPoly jacobi_P(int k, double p, double q);

// --- bivariate families ---------------------------------------------------

// Bivariate extension of M: table over y^l z^(u*s).
BiPoly bivariate_MK(int k, double p, double q, int ups);

// Companion: M_k^(p,q)(y) * sum_{j<=k} Y_j^(-p-q)(z; u).
BiProduct companion_MK(int k, double p, double q, int ups);

// Jacobi-type bivariate family: table over ((1-y)/2)^l z^(u*s).
BiPoly bivariate_JK(int k, double p, double q, int ups);

// Companion of the Jacobi-type family: P_k^(p,q)(y) * sum_{j<=k} Y_j^(q)(z; u).
BiProduct companion_JK(int k, double p, double q, int ups);

// --- bivariate Mittag-Leffler ----------------------------------------------

struct MLResult {
    double value = 0.0;
    long terms = 0;
    bool converged = true;
};

// E(g1; g2 | a, b, u)(y, z) = sum_{l,m} (g1)_{m+l} (g2)_l y^l z^(u*m)
//                            / (Gamma(a+l) Gamma(b+u*m) l! m!).
// Terminating when g1 is a nonpositive integer; otherwise summed over
// anti-diagonals until five consecutive diagonals are negligible.
MLResult mittag_leffler(double g1, double g2, double a, double b, int ups,
                        double y, double z);

} // namespace mkon
