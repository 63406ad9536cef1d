#include "mkon/fourier.hpp"

#include "mkon/quadrature.hpp"

#include <cmath>

namespace mkon {

namespace {

constexpr cplx I{0.0, 1.0};

cplx cpow2(const cplx& e) { return std::exp(std::log(2.0) * e); }

// complex Beta through the gamma kernel
cplx cbeta(const cplx& a, const cplx& b) {
    return cgamma(a) * cgamma(b) / cgamma(a + b);
}

// Gauss-Legendre panel nodes over [lo, hi]; weights folded in.
struct PanelGrid {
    std::vector<double> x, w;
};

PanelGrid make_panels(double lo, double hi, double panel_w, int pts) {
    // fixed Legendre nodes come from the quadrature module at first use;
    // to keep this file self-contained we build them once per call via
    // Newton on the Legendre polynomial (pts is small)
    static thread_local std::vector<double> nodes, wts;
    static thread_local int cached_pts = -1;
    if (cached_pts != pts) {
        nodes.assign(pts, 0.0);
        wts.assign(pts, 0.0);
        for (int i = 0; i < pts; i++) {
            double x = std::cos(pi * (i + 0.75) / (pts + 0.5));
            for (int it = 0; it < 100; it++) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= pts; j++) {
                    double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = pts * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= pts; j++) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            double dp = pts * (x * p1 - p0) / (x * x - 1.0);
            nodes[i] = x;
            wts[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        cached_pts = pts;
    }
    int npanels = std::max(1, int(std::ceil((hi - lo) / panel_w)));
    double h = (hi - lo) / npanels;
    PanelGrid g;
    g.x.reserve(size_t(npanels) * pts);
    g.w.reserve(size_t(npanels) * pts);
    for (int pnl = 0; pnl < npanels; pnl++) {
        double a = lo + pnl * h, c = a + 0.5 * h;
        for (int i = 0; i < pts; i++) {
            g.x.push_back(c + 0.5 * h * nodes[i]);
            g.w.push_back(0.5 * h * wts[i]);
        }
    }
    return g;
}

double pick_panel_w(double base, double freq) {
    double cap = pi / (4.0 * std::max(1.0, std::abs(freq)));
    return std::min(base, cap);
}

} // namespace

cplx G_factor(double p, double q, double x1, double x2) {
    cplx e = 0.5 - p - q - I * x2;
    return cpow2(e) * cbeta(p + I * x1, q - I * x1) * cgamma(e);
}

cplx Psi1(int k, double p1, double q1, double alpha, double beta, int ups,
          double x1, double x2) {
    cplx acc = 0.0;
    cplx a1 = q1 - I * x1, b1 = 1.0 - p1 - I * x1, w2 = 0.5 - p1 - q1 - I * x2;
    for (int l = 0; l <= k; l++) {
        for (int s = 0; s + l <= k; s++) {
            double re = pochhammer(double(-k), l + s) *
                        pochhammer(k + 1.0 - alpha, l) /
                        (factorial(l) * factorial(s));
            if (re == 0.0) continue;
            double gden = recip_gamma(l + beta + 1.0) *
                          recip_gamma(double(ups) * s - alpha - beta + 1.0);
            cplx t = re * gden * pochhammer(a1, l) / pochhammer(b1, l) *
                     pochhammer(w2, ups * s) * pow_int(2.0, ups * s);
            acc += t;
        }
    }
    return acc;
}

cplx Psi2(int r, double p2, double q2, double gamma, double delta, int ups,
          double x1, double x2) {
    cplx a1 = q2 - I * x1, b1 = 1.0 - p2 - I * x1, w2 = 0.5 - p2 - q2 - I * x2;
    cplx ssum = 0.0;
    for (int s = 0; s <= r; s++) {
        double re = pochhammer(double(-r), s) * pochhammer(r + 1.0 - gamma, s) /
                    factorial(s) * recip_gamma(s + delta + 1.0);
        ssum += re * pochhammer(a1, s) / pochhammer(b1, s);
    }
    cplx tri = 0.0;
    for (int j = 0; j <= r; j++)
        for (int l = 0; l <= j; l++)
            for (int m = 0; m <= l; m++) {
                double msgn = (m & 1) ? -1.0 : 1.0;
                double re = msgn * pow_int(2.0, l) *
                            pochhammer((m - gamma - delta + 1.0) / ups, j) /
                            (factorial(j) * factorial(m) * factorial(l - m));
                tri += re * pochhammer(w2, l);
            }
    return ssum * tri;
}

cplx fourier_closed_left(int k, double p1, double q1, double alpha,
                         double beta, int ups, double x1, double x2) {
    double sgn = (k & 1) ? -1.0 : 1.0;
    return sgn * gamma_r(k + beta + 1.0) * G_factor(p1, q1, x1, x2) *
           Psi1(k, p1, q1, alpha, beta, ups, x1, x2);
}

cplx fourier_closed_right(int r, double p2, double q2, double gamma,
                          double delta, int ups, double x1, double x2) {
    double sgn = (r & 1) ? -1.0 : 1.0;
    return sgn * gamma_r(r + delta + 1.0) * G_factor(p2, q2, x1, x2) *
           Psi2(r, p2, q2, gamma, delta, ups, x1, x2);
}

namespace {

// integral over R of e^((c - i x1) y) (1 + e^y)^(-pq) dy, panels
cplx logistic_moment(double c, double pq, double x1, const DirectOpts& o) {
    // decay e^(c y) at -inf, e^((c - pq) y) at +inf
    double rate_lo = c, rate_hi = pq - c;
    double L_lo = o.log_tail / rate_lo, L_hi = o.log_tail / rate_hi;
    PanelGrid g = make_panels(-L_lo, L_hi, pick_panel_w(o.panel_w, x1),
                              o.panel_pts);
    cplx acc = 0.0;
    for (size_t i = 0; i < g.x.size(); i++) {
        double y = g.x[i];
        double mag = std::exp(c * y - pq * std::log1p(std::exp(y)));
        acc += g.w[i] * mag * std::exp(-I * x1 * y);
    }
    return acc;
}

// integral over R of e^((c - i x2) z - e^z / 2) dz, panels
cplx halfexp_moment(double c, double x2, const DirectOpts& o) {
    double L_lo = o.log_tail / c;
    double L_hi = 6.0; // e^(-e^6/2) ~ 1e-88
    PanelGrid g = make_panels(-L_lo, L_hi, pick_panel_w(o.panel_w, x2),
                              o.panel_pts);
    cplx acc = 0.0;
    for (size_t i = 0; i < g.x.size(); i++) {
        double z = g.x[i];
        double mag = std::exp(c * z - 0.5 * std::exp(z));
        acc += g.w[i] * mag * std::exp(-I * x2 * z);
    }
    return acc;
}

} // namespace

CplxResult fourier_direct_left(int k, double p1, double q1, double alpha,
                               double beta, int ups, double x1, double x2,
                               const DirectOpts& o) {
    CplxResult res;
    BiPoly K = bivariate_MK(k, alpha, beta, ups);
    // decay preconditions, per active monomial
    for (int l = 0; l <= k; l++) {
        bool active = false;
        for (int s = 0; s + l <= k; s++)
            if (K.c[l][s] != 0.0) active = true;
        if (!active) continue;
        if (!(p1 - l > 0.02) || !(q1 + l > 0.02)) {
            res.error = "integrand does not decay: need l < p1 for every active power";
            return res;
        }
    }
    if (!(0.5 - p1 - q1 > 0.02)) {
        res.error = "integrand does not decay: need p1 + q1 < 1/2";
        return res;
    }
    cplx acc = 0.0;
    for (int l = 0; l <= k; l++) {
        bool active = false;
        for (int s = 0; s + l <= k; s++)
            if (K.c[l][s] != 0.0) active = true;
        if (!active) continue;
        cplx ym = logistic_moment(q1 + l, p1 + q1, x1, o);
        for (int s = 0; s + l <= k; s++) {
            if (K.c[l][s] == 0.0) continue;
            cplx zm = halfexp_moment(0.5 - p1 - q1 + double(ups) * s, x2, o);
            acc += K.c[l][s] * ym * zm;
        }
    }
    res.value = acc;
    return res;
}

CplxResult fourier_direct_right(int r, double p2, double q2, double gamma,
                                double delta, int ups, double x1, double x2,
                                const DirectOpts& o) {
    CplxResult res;
    BiProduct C = companion_MK(r, gamma, delta, ups);
    UniPoly base = C.base.dense();
    for (size_t m = 0; m < base.coef.size(); m++) {
        if (base.coef[m] == 0.0) continue;
        if (!(p2 - double(m) > 0.02) || !(q2 + double(m) > 0.02)) {
            res.error = "integrand does not decay: need m < p2 for every active power";
            return res;
        }
    }
    if (!(0.5 - p2 - q2 > 0.02)) {
        res.error = "integrand does not decay: need p2 + q2 < 1/2";
        return res;
    }
    cplx acc = 0.0;
    UniPoly tail = C.tail.dense();
    for (size_t m = 0; m < base.coef.size(); m++) {
        if (base.coef[m] == 0.0) continue;
        cplx ym = logistic_moment(q2 + double(m), p2 + q2, x1, o);
        for (size_t i = 0; i < tail.coef.size(); i++) {
            if (tail.coef[i] == 0.0) continue;
            cplx zm = halfexp_moment(0.5 - p2 - q2 + double(i), x2, o);
            acc += base.coef[m] * tail.coef[i] * ym * zm;
        }
    }
    res.value = acc;
    return res;
}

double fourier_biorth_norm(int k, double p1, double q1, double p2, double q2) {
    SignedLog t = slog_factorial(k) * slog_gamma(p1 + q1) * slog_gamma(p2 + q2) *
                  slog_gamma(p1 + p2 + 1.0 - k) *
                  slog_recip_gamma(k + q1 + q2) *
                  slog_recip_gamma(p1 + p2 + q1 + q2 - k);
    return 4.0 * pi * pi / (p1 + p2 - 2.0 * k) * t.value();
}

namespace {

// Shared frequency-side integral:
//   integral W1(x1) W2(x2) Psi1(x1, x2) Psi2(-x1, -x2) dx1 dx2
// with W1 the four-gamma x1 weight and W2 the two-gamma x2 weight.
// Both Psi factors split per monomial into functions of a single axis, so
// the tensor-panel sum reduces to products of per-axis sums.
cplx xi_pairing(int k, int r, double p1, double q1, double p2, double q2,
                int ups, const XiQuadOpts& o) {
    double alpha = p1 + p2 + 1.0, beta = q1 + q2 - 1.0;
    double gamma = alpha, delta = beta;

    PanelGrid g1 = make_panels(-o.L1, o.L1, o.panel_w, o.panel_pts);
    PanelGrid g2 = make_panels(-o.L2, o.L2, o.panel_w, o.panel_pts);

    // per-axis basis for Psi1(x1, x2):
    //   A_l(x1) = (q1 - i x1)_l / (1 - p1 - i x1)_l
    //   B_s(x2) = (1/2 - p1 - q1 - i x2)_(u s) 2^(u s)
    // and Psi2(-x1, -x2) = S(-x1) * Tri(-x2), so the whole tensor sum
    // collapses to products of the per-axis accumulations below.
    std::vector<cplx> axis1(size_t(k) + 1, cplx{0.0, 0.0});
    std::vector<cplx> axis2(size_t(k) + 1, cplx{0.0, 0.0});

    for (size_t i = 0; i < g1.x.size(); i++) {
        double x1 = g1.x[i];
        cplx W1 = cgamma(p1 + I * x1) * cgamma(p2 - I * x1) *
                  cgamma(q1 - I * x1) * cgamma(q2 + I * x1);
        // S(-x1): s-sum of Psi2 at negated frequency
        cplx a1 = q2 + I * x1, b1 = 1.0 - p2 + I * x1;
        cplx S = 0.0;
        for (int s = 0; s <= r; s++) {
            double re = pochhammer(double(-r), s) *
                        pochhammer(r + 1.0 - gamma, s) / factorial(s) *
                        recip_gamma(s + delta + 1.0);
            S += re * pochhammer(a1, s) / pochhammer(b1, s);
        }
        cplx qa = q1 - I * x1, pb = 1.0 - p1 - I * x1;
        for (int l = 0; l <= k; l++) {
            cplx A = pochhammer(qa, l) / pochhammer(pb, l);
            axis1[size_t(l)] += g1.w[i] * W1 * A * S;
        }
    }

    for (size_t j = 0; j < g2.x.size(); j++) {
        double x2 = g2.x[j];
        cplx W2 = cgamma(0.5 - p1 - q1 - I * x2) * cgamma(0.5 - p2 - q2 + I * x2);
        // Tri(-x2): triple sum of Psi2 at negated frequency
        cplx w2n = 0.5 - p2 - q2 + I * x2;
        cplx Tri = 0.0;
        for (int jj = 0; jj <= r; jj++)
            for (int l = 0; l <= jj; l++)
                for (int m = 0; m <= l; m++) {
                    double msgn = (m & 1) ? -1.0 : 1.0;
                    double re = msgn * pow_int(2.0, l) *
                                pochhammer((m - gamma - delta + 1.0) / ups, jj) /
                                (factorial(jj) * factorial(m) * factorial(l - m));
                    Tri += re * pochhammer(w2n, l);
                }
        cplx wb = 0.5 - p1 - q1 - I * x2;
        for (int s = 0; s <= k; s++) {
            cplx B = pochhammer(wb, ups * s) * pow_int(2.0, ups * s);
            axis2[size_t(s)] += g2.w[j] * W2 * B * Tri;
        }
    }

    cplx total = 0.0;
    for (int l = 0; l <= k; l++)
        for (int s = 0; s + l <= k; s++) {
            double re = pochhammer(double(-k), l + s) *
                        pochhammer(k + 1.0 - alpha, l) /
                        (factorial(l) * factorial(s)) *
                        recip_gamma(l + beta + 1.0) *
                        recip_gamma(double(ups) * s - alpha - beta + 1.0);
            if (re == 0.0) continue;
            total += re * axis1[size_t(l)] * axis2[size_t(s)];
        }
    return total;
}

} // namespace

BiorthResult verify_fourier_biorthogonality(int k, int r, double p1, double q1,
                                            double p2, double q2, int ups,
                                            const XiQuadOpts& o) {
    BiorthResult res;
    cplx pair = xi_pairing(k, r, p1, q1, p2, q2, ups, o);
    // U factors carry 2^(1/2-p1-q1) and 2^(1/2-p2-q2)
    double scale = std::exp2(0.5 - p1 - q1) * std::exp2(0.5 - p2 - q2);
    res.lhs = scale * pair;
    res.rhs = k == r ? fourier_biorth_norm(k, p1, q1, p2, q2) : 0.0;
    return res;
}

ParsevalResult parseval_consistency(int k, int r, double p1, double q1,
                                    double p2, double q2, int ups,
                                    const XiQuadOpts& o) {
    ParsevalResult res;
    double alpha = p1 + p2 + 1.0, beta = q1 + q2 - 1.0;
    // position side: the exponential substitutions turn the pairing of the
    // two transformed weight functions into the bivariate functional at the
    // tied parameters, evaluated as a continued functional
    PairCheck pc = verify_MK_biorthogonality(k, r, alpha, beta, ups,
                                             BiMode::Continued);
    res.position = pc.lhs;
    // frequency side: same xi integrand as the biorthogonality pairing,
    // rescaled by the transform prefactors (delta = beta here)
    cplx pair = xi_pairing(k, r, p1, q1, p2, q2, ups, o);
    double ksgn = ((k + r) & 1) ? -1.0 : 1.0;
    SignedLog pre = slog_gamma(k + beta + 1.0) * slog_gamma(r + beta + 1.0) *
                    slog_recip_gamma(p1 + q1) * slog_recip_gamma(p2 + q2);
    double twos = std::exp2(1.0 - (p1 + q1 + p2 + q2));
    res.frequency = ksgn * pre.value() * twos / (4.0 * pi * pi) * pair;
    return res;
}

double weight_min_on_grid(double p, double q, double ymax, double zmax, int n) {
    double mn = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= n; i++)
        for (int j = 1; j <= n; j++) {
            double y = ymax * i / n, z = zmax * j / n;
            double v = std::pow(y, q) * std::pow(1.0 + y, -(p + q)) *
                       std::exp(-z) * std::pow(z, -(p + q));
            if (!std::isfinite(v)) return -1.0;
            mn = std::min(mn, v);
        }
    return mn;
}

double gamma_decay_ratio(double sigma, double t) {
    double at = std::abs(t);
    double bound = std::sqrt(2.0 * pi) * std::pow(at, sigma - 0.5) *
                   std::exp(-0.5 * pi * at);
    return std::abs(cgamma(cplx{sigma, t})) / bound;
}

} // namespace mkon
