#include "mkon/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace mkon {

namespace {

QuadRule rule_from_tridiag(const Eigen::VectorXd& diag,
                           const Eigen::VectorXd& sub, double mu0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    int n = int(diag.size());
    QuadRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; i++) {
        r.x[i] = es.eigenvalues()[i];
        double v = es.eigenvectors()(0, i);
        r.w[i] = mu0 * v * v;
    }
    return r;
}

} // namespace

QuadRule gauss_jacobi(int n, double a, double b) {
    Eigen::VectorXd diag(n), sub(n - 1);
    double ab = a + b;
    diag[0] = (b - a) / (ab + 2.0);
    for (int i = 1; i < n; i++) {
        double d = 2.0 * i + ab;
        diag[i] = (b * b - a * a) / (d * (d + 2.0));
    }
    for (int i = 1; i < n; i++) {
        double beta;
        if (i == 1) {
            // (1+a+b) cancels against the numerator; this form stays finite
            // at a+b = -1 where the generic expression is 0/0
            beta = 4.0 * (1.0 + a) * (1.0 + b) /
                   ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            double d = 2.0 * i + ab;
            beta = 4.0 * i * (i + a) * (i + b) * (i + ab) /
                   (d * d * (d + 1.0) * (d - 1.0));
        }
        sub[i - 1] = std::sqrt(beta);
    }
    SignedLog mu0 = slog_gamma(a + 1.0) * slog_gamma(b + 1.0) *
                    slog_recip_gamma(ab + 2.0);
    return rule_from_tridiag(diag, sub, std::exp2(ab + 1.0) * mu0.value());
}

QuadRule gauss_jacobi01(int n, double a, double b) {
    QuadRule r = gauss_jacobi(n, a, b);
    double scale = std::exp2(-(a + b + 1.0));
    for (int i = 0; i < n; i++) {
        r.x[i] = 0.5 * (1.0 + r.x[i]);
        r.w[i] *= scale;
    }
    return r;
}

QuadRule gauss_laguerre(int n, double alpha) {
    Eigen::VectorXd diag(n), sub(n - 1);
    for (int i = 0; i < n; i++) diag[i] = 2.0 * i + alpha + 1.0;
    for (int i = 0; i < n - 1; i++) sub[i] = std::sqrt((i + 1.0) * (i + 1.0 + alpha));
    return rule_from_tridiag(diag, sub, gamma_r(alpha + 1.0));
}

QuadRule gauss_legendre(int n) {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n), sub(n - 1);
    for (int i = 1; i < n; i++) {
        double ii = i;
        sub[i - 1] = ii / std::sqrt(4.0 * ii * ii - 1.0);
    }
    return rule_from_tridiag(diag, sub, 2.0);
}

double integrate(const QuadRule& r, const std::function<double(double)>& f) {
    CompSum acc;
    for (size_t i = 0; i < r.x.size(); i++) acc.add(r.w[i] * f(r.x[i]));
    return acc.value();
}

MWeightResult integrate_M_weight(const UniPoly& g, double p, double q,
                                 int order) {
    MWeightResult res;
    UniPoly gd = g.dense();
    int d = gd.degree();
    if (!(p > d + 1.0)) {
        res.error = "integral diverges: p > deg+1 required";
        return res;
    }
    if (!(q > -1.0)) {
        res.error = "integral diverges: q > -1 required";
        return res;
    }
    int n = order > 0 ? order : d / 2 + 2;
    QuadRule r = gauss_jacobi01(n, p - 2.0 - d, q);
    CompSum acc;
    for (size_t i = 0; i < r.x.size(); i++) {
        double t = r.x[i];
        double y = t / (1.0 - t);
        // remaining factor after the weight substitution: (1-t)^deg * g(y)
        acc.add(r.w[i] * gd.eval(y) * pow_int(1.0 - t, d));
    }
    res.value = acc.value();
    return res;
}

MWeightResult integrate_M_weight_adaptive(
    const std::function<double(double)>& f, double p, double q) {
    MWeightResult res;
    if (!(p > 1.0)) {
        res.error = "integral diverges: p > 1 required";
        return res;
    }
    if (!(q > -1.0)) {
        res.error = "integral diverges: q > -1 required";
        return res;
    }
    double prev = 0.0;
    bool have_prev = false;
    for (int n = 80; n <= 640; n *= 2) {
        QuadRule r = gauss_jacobi01(n, p - 2.0, q);
        CompSum acc;
        for (size_t i = 0; i < r.x.size(); i++) {
            double t = r.x[i];
            acc.add(r.w[i] * f(t / (1.0 - t)));
        }
        double v = acc.value();
        if (have_prev && std::abs(v - prev) <= 1e-11 * std::max(1.0, std::abs(v))) {
            res.value = v;
            return res;
        }
        prev = v;
        have_prev = true;
    }
    res.value = prev;
    return res;
}

double gamma_moment_functional(const UniPoly& g, double a) {
    CompSum acc;
    for (size_t j = 0; j < g.coef.size(); j++) {
        if (g.coef[j] == 0.0) continue;
        SignedLog t = SignedLog::from_value(g.coef[j]) *
                      slog_gamma(a + double(g.stride) * j + 1.0);
        acc.add(t.value());
    }
    return acc.value();
}

double beta_moment_functional(const UniPoly& g, double p, double q) {
    UniPoly gd = g.dense();
    SignedLog inv_gpq = slog_recip_gamma(p + q);
    CompSum acc;
    for (size_t j = 0; j < gd.coef.size(); j++) {
        if (gd.coef[j] == 0.0) continue;
        SignedLog t = SignedLog::from_value(gd.coef[j]) *
                      slog_gamma(q + double(j) + 1.0) *
                      slog_gamma(p - 1.0 - double(j)) * inv_gpq;
        acc.add(t.value());
    }
    return acc.value();
}

PairCheck verify_konhauser_biorthogonality(int k, int r, double c, int ups,
                                           int order) {
    PairCheck res;
    if (!(c > -1.0)) {
        res.error = "weight requires c > -1";
        return res;
    }
    UniPoly Z = konhauser_Z(k, c, ups);
    UniPoly Y = konhauser_Y(r, c, ups);
    int deg = ups * k + r;
    int n = order > 0 ? order : deg / 2 + 2;
    QuadRule rule = gauss_laguerre(n, c);
    CompSum acc;
    for (size_t i = 0; i < rule.x.size(); i++)
        acc.add(rule.w[i] * Z.eval(rule.x[i]) * Y.eval(rule.x[i]));
    res.lhs = acc.value();
    res.rhs = k == r ? (slog_gamma(double(ups) * k + c + 1.0) / slog_factorial(k)).value()
                     : 0.0;
    return res;
}

PairCheck konhauser_pair_functional(int k, int r, double c, int ups) {
    PairCheck res;
    UniPoly prod = poly_mul(konhauser_Z(k, c, ups), konhauser_Y(r, c, ups));
    res.lhs = gamma_moment_functional(prod, c);
    res.rhs = k == r ? (slog_gamma(double(ups) * k + c + 1.0) / slog_factorial(k)).value()
                     : 0.0;
    return res;
}

double M_orthogonality_norm(int k, double p, double q) {
    SignedLog t = slog_factorial(k) * slog_gamma(p - k) * slog_gamma(q + k + 1.0) *
                  slog_recip_gamma(p + q - k);
    return t.value() / (p - 2.0 * k - 1.0);
}

PairCheck verify_M_orthogonality(int k, int r, double p, double q, int order) {
    PairCheck res;
    UniPoly prod = poly_mul(finite_M(k, p, q), finite_M(r, p, q));
    MWeightResult iv = integrate_M_weight(prod, p, q, order);
    if (iv.error) {
        res.error = iv.error;
        return res;
    }
    res.lhs = iv.value;
    res.rhs = k == r ? M_orthogonality_norm(k, p, q) : 0.0;
    return res;
}

PairCheck verify_MK_biorthogonality(int k, int r, double p, double q, int ups,
                                    BiMode mode, int order) {
    PairCheck res;
    BiPoly K = bivariate_MK(k, p, q, ups);
    BiProduct C = companion_MK(r, p, q, ups);

    if (mode == BiMode::Numeric && !(p + q < 1.0)) {
        res.error = "numeric z integral requires p + q < 1";
        return res;
    }

    std::optional<QuadRule> zrule;
    if (mode == BiMode::Numeric) {
        int zdeg = ups * k + r;
        int nz = order > 0 ? order : zdeg / 2 + 8;
        zrule = gauss_laguerre(nz, -p - q);
    }

    CompSum total;
    for (int l = 0; l <= k; l++) {
        // y side: y^l * M_r under the rational weight
        UniPoly fy = C.base.dense();
        fy.coef.insert(fy.coef.begin(), size_t(l), 0.0);
        double iy;
        if (mode == BiMode::Continued) {
            iy = beta_moment_functional(fy, p, q);
        } else {
            MWeightResult m = integrate_M_weight(fy, p, q, order);
            if (m.error) {
                res.error = m.error;
                return res;
            }
            iy = m.value;
        }

        // z side: (sum_s c[l][s] z^(u*s)) * tail_r
        UniPoly zp = poly_mul(K.z_slice(l), C.tail);
        double iz;
        if (mode == BiMode::Numeric) {
            CompSum acc;
            for (size_t i = 0; i < zrule->x.size(); i++)
                acc.add(zrule->w[i] * zp.eval(zrule->x[i]));
            iz = acc.value();
        } else {
            iz = gamma_moment_functional(zp, -p - q);
        }
        total.add(iy * iz);
    }
    res.lhs = total.value();
    res.rhs = k == r ? M_orthogonality_norm(k, p, q) : 0.0;
    return res;
}

} // namespace mkon
