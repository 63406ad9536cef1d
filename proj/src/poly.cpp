#include "mkon/poly.hpp"

#include <algorithm>
#include <cmath>

namespace mkon {

double UniPoly::eval(double x) const {
    if (coef.empty()) return 0.0;
    double xs = pow_int(x, stride);
    double r = 0.0;
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) r = r * xs + *it;
    return r;
}

UniPoly UniPoly::dense() const {
    if (stride == 1) return *this;
    UniPoly d;
    d.stride = 1;
    d.coef.assign(size_t(degree()) + 1, 0.0);
    for (size_t j = 0; j < coef.size(); j++) d.coef[j * stride] = coef[j];
    return d;
}

UniPoly poly_mul(const UniPoly& a, const UniPoly& b) {
    UniPoly da = a.dense(), db = b.dense();
    UniPoly r;
    r.coef.assign(da.coef.size() + db.coef.size() - 1, 0.0);
    for (size_t i = 0; i < da.coef.size(); i++)
        for (size_t j = 0; j < db.coef.size(); j++)
            r.coef[i + j] += da.coef[i] * db.coef[j];
    return r;
}

UniPoly poly_add(const UniPoly& a, const UniPoly& b) {
    UniPoly da = a.dense(), db = b.dense();
    UniPoly r;
    r.coef.assign(std::max(da.coef.size(), db.coef.size()), 0.0);
    for (size_t i = 0; i < da.coef.size(); i++) r.coef[i] += da.coef[i];
    for (size_t i = 0; i < db.coef.size(); i++) r.coef[i] += db.coef[i];
    return r;
}

UniPoly poly_scale(const UniPoly& a, double s) {
    UniPoly r = a;
    for (auto& v : r.coef) v *= s;
    return r;
}

double BiPoly::eval(double y, double z) const {
    double u = ymap == YMap::HalfOneMinus ? 0.5 * (1.0 - y) : y;
    double zs = pow_int(z, ups);
    CompSum acc;
    double ul = 1.0;
    for (int l = 0; l <= k; l++) {
        double zp = 1.0;
        for (int s = 0; s + l <= k; s++) {
            acc.add(c[l][s] * ul * zp);
            zp *= zs;
        }
        ul *= u;
    }
    return acc.value();
}

UniPoly BiPoly::z_slice(int l) const {
    UniPoly r;
    r.stride = ups;
    r.coef.assign(c[l].begin(), c[l].end());
    return r;
}

std::optional<std::string> validate_common(const Params& pr) {
    if (pr.k < 0 || pr.k > 30) return "k in [0, 30] required";
    if (pr.ups < 1 || pr.ups > 8) return "upsilon in [1, 8] required";
    if (!std::isfinite(pr.p) || !std::isfinite(pr.q)) return "finite p, q required";
    return std::nullopt;
}

std::optional<std::string> validate_finite_family(const Params& pr) {
    if (auto e = validate_common(pr)) return e;
    if (!(pr.p > 2.0 * pr.k + 1.0)) return "p > 2k+1 required";
    return std::nullopt;
}

UniPoly konhauser_Z(int k, double c, int ups) {
    UniPoly r;
    r.stride = ups;
    r.coef.resize(size_t(k) + 1);
    SignedLog lead = slog_gamma(double(ups) * k + c + 1.0) / slog_factorial(k);
    for (int j = 0; j <= k; j++) {
        SignedLog t = lead * SignedLog::from_value(binomial(k, j)) *
                      slog_recip_gamma(double(ups) * j + c + 1.0);
        r.coef[j] = (j & 1 ? -1.0 : 1.0) * t.value();
    }
    return r;
}

UniPoly konhauser_Y(int k, double c, int ups) {
    UniPoly r;
    r.coef.resize(size_t(k) + 1);
    double invkf = 1.0 / factorial(k);
    for (int i = 0; i <= k; i++) {
        CompSum inner;
        for (int j = 0; j <= i; j++) {
            double sgn = (j & 1) ? -1.0 : 1.0;
            inner.add(sgn * binomial(i, j) * pochhammer((1.0 + c + j) / ups, k));
        }
        r.coef[i] = invkf / factorial(i) * inner.value();
    }
    return r;
}

UniPoly finite_M(int k, double p, double q) {
    UniPoly r;
    r.coef.resize(size_t(k) + 1);
    double ksgn = (k & 1) ? -1.0 : 1.0;
    for (int m = 0; m <= k; m++) {
        // gamma ratio kept in log space; pochhammers are modest doubles
        SignedLog gr = slog_gamma(k + q + 1.0) * slog_recip_gamma(m + q + 1.0);
        double msgn = (m & 1) ? -1.0 : 1.0;
        r.coef[m] = ksgn * msgn * pochhammer(double(-k), m) *
                    pochhammer(k + 1.0 - p, m) / factorial(m) * gr.value();
    }
    return r;
}

namespace {

// Shared coefficient core: a_l = Gamma(k+p+1) (-k)_l (k+p+q+1)_l
//                                / (k! l! Gamma(l+p+1)), the u-expansion of
// the Jacobi family.  Used by jacobi_P and bivariate_JK's s = 0 column.
std::vector<double> jacobi_u_coeffs(int k, double p, double q) {
    std::vector<double> a(size_t(k) + 1);
    for (int l = 0; l <= k; l++) {
        SignedLog gr = slog_gamma(k + p + 1.0) * slog_recip_gamma(l + p + 1.0);
        a[l] = pochhammer(double(-k), l) * pochhammer(k + p + q + 1.0, l) /
               (factorial(k) * factorial(l)) * gr.value();
    }
    return a;
}

} // namespace

UniPoly jacobi_P(int k, double p, double q) {
    auto a = jacobi_u_coeffs(k, p, q);
    UniPoly r;
    r.coef.assign(size_t(k) + 1, 0.0);
    // u^l = ((1-y)/2)^l expanded into y powers
    for (int l = 0; l <= k; l++) {
        double scale = a[l] / pow_int(2.0, l);
        for (int m = 0; m <= l; m++) {
            double sgn = (m & 1) ? -1.0 : 1.0;
            r.coef[m] += scale * sgn * binomial(l, m);
        }
    }
    return r;
}

BiPoly bivariate_MK(int k, double p, double q, int ups) {
    BiPoly b;
    b.k = k;
    b.ups = ups;
    b.ymap = YMap::Direct;
    b.c.resize(size_t(k) + 1);
    b.c_log.resize(size_t(k) + 1);
    SignedLog gk = slog_gamma(k + q + 1.0);
    int ksgn = (k & 1) ? -1 : 1;
    for (int l = 0; l <= k; l++) {
        b.c[l].resize(size_t(k - l) + 1);
        b.c_log[l].resize(size_t(k - l) + 1);
        for (int s = 0; s + l <= k; s++) {
            SignedLog t = gk;
            t = t * SignedLog::from_value(pochhammer(double(-k), l + s));
            t = t * SignedLog::from_value(pochhammer(k + 1.0 - p, l));
            t = t * slog_recip_gamma(l + q + 1.0);
            t = t * slog_recip_gamma(double(ups) * s - p - q + 1.0);
            t = t / (slog_factorial(l) * slog_factorial(s));
            // (-y)^l with the leading (-1)^k: net sign (-1)^(k+l) on y^l
            t.sign *= ksgn * ((l & 1) ? -1 : 1);
            b.c_log[l][s] = t;
            b.c[l][s] = t.value();
        }
    }
    return b;
}

BiProduct companion_MK(int k, double p, double q, int ups) {
    BiProduct r;
    r.base = finite_M(k, p, q);
    UniPoly tail;
    tail.coef = {0.0};
    for (int j = 0; j <= k; j++) tail = poly_add(tail, konhauser_Y(j, -p - q, ups));
    r.tail = tail;
    return r;
}

BiPoly bivariate_JK(int k, double p, double q, int ups) {
    BiPoly b;
    b.k = k;
    b.ups = ups;
    b.ymap = YMap::HalfOneMinus;
    b.c.resize(size_t(k) + 1);
    b.c_log.resize(size_t(k) + 1);
    for (int l = 0; l <= k; l++) {
        b.c[l].resize(size_t(k - l) + 1);
        b.c_log[l].resize(size_t(k - l) + 1);
        for (int s = 0; s + l <= k; s++) {
            SignedLog t = slog_gamma(k + p + 1.0);
            t = t * SignedLog::from_value(pochhammer(double(-k), l + s));
            t = t * SignedLog::from_value(pochhammer(k + p + q + 1.0, l));
            t = t * slog_recip_gamma(l + p + 1.0);
            t = t * slog_recip_gamma(double(ups) * s + q + 1.0);
            t = t / (slog_factorial(k) * slog_factorial(l) * slog_factorial(s));
            b.c_log[l][s] = t;
            b.c[l][s] = t.value();
        }
    }
    return b;
}

BiProduct companion_JK(int k, double p, double q, int ups) {
    BiProduct r;
    r.base = jacobi_P(k, p, q);
    UniPoly tail;
    tail.coef = {0.0};
    for (int j = 0; j <= k; j++) tail = poly_add(tail, konhauser_Y(j, q, ups));
    r.tail = tail;
    return r;
}

MLResult mittag_leffler(double g1, double g2, double a, double b, int ups,
                        double y, double z) {
    MLResult res;
    double zs = pow_int(z, ups);

    auto term = [&](int l, int m) {
        SignedLog t = SignedLog::from_value(pochhammer(g1, m + l));
        if (t.is_zero()) return 0.0;
        t = t * SignedLog::from_value(pochhammer(g2, l));
        t = t * slog_recip_gamma(a + l) * slog_recip_gamma(b + double(ups) * m);
        t = t / (slog_factorial(l) * slog_factorial(m));
        t = t * slog_from_pow(y, l) * slog_from_pow(zs, m);
        return t.value();
    };

    bool terminating = g1 <= 0.0 && g1 == std::floor(g1) && g1 >= -60.0;
    CompSum acc;
    if (terminating) {
        int kk = int(-g1);
        for (int l = 0; l <= kk; l++)
            for (int m = 0; m + l <= kk; m++) { acc.add(term(l, m)); res.terms++; }
        res.value = acc.value();
        return res;
    }

    const long cap = 100000;
    int quiet = 0;
    for (int d = 0; d < 10000; d++) {
        double dmax = 0.0;
        for (int l = 0; l <= d; l++) {
            double t = term(l, d - l);
            acc.add(t);
            res.terms++;
            dmax = std::max(dmax, std::abs(t));
            if (res.terms >= cap) { res.converged = false; res.value = acc.value(); return res; }
        }
        if (dmax < 1e-16 * std::max(1e-300, std::abs(acc.value())))
            quiet++;
        else
            quiet = 0;
        if (quiet >= 5) break;
    }
    res.value = acc.value();
    return res;
}

} // namespace mkon
