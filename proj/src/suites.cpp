#include "mkon/suites.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "mkon/fourier.hpp"
#include "mkon/identity.hpp"
#include "mkon/quadrature.hpp"
#include "mkon/transform.hpp"

namespace mkon {

SuiteConfig SuiteConfig::defaults() { return {}; }

SuiteConfig SuiteConfig::load(const std::string& path, std::string* err) {
    SuiteConfig cfg;
    std::ifstream in(path);
    if (!in) {
        if (err) *err = "cannot open config: " + path;
        return cfg;
    }
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) cfg.kv[key] = val;
    }
    return cfg;
}

double SuiteConfig::get_d(const std::string& key, double dflt) const {
    auto it = kv.find(key);
    return it == kv.end() ? dflt : std::stod(it->second);
}

int SuiteConfig::get_i(const std::string& key, int dflt) const {
    auto it = kv.find(key);
    return it == kv.end() ? dflt : std::stoi(it->second);
}

std::vector<double> SuiteConfig::get_list(const std::string& key,
                                          const std::vector<double>& dflt) const {
    auto it = kv.find(key);
    if (it == kv.end()) return dflt;
    std::vector<double> out;
    std::stringstream ss(it->second);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

std::vector<int> SuiteConfig::get_ilist(const std::string& key,
                                        const std::vector<int>& dflt) const {
    auto it = kv.find(key);
    if (it == kv.end()) return dflt;
    std::vector<int> out;
    std::stringstream ss(it->second);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::vector<std::string> all_suite_names() {
    return {"konhauser", "m-orth", "mk-biorth", "relations", "genfun",
            "pde",       "laplace", "fractional", "fourier"};
}

bool known_suite(const std::string& name) {
    if (name == "all") return true;
    for (const auto& s : all_suite_names())
        if (s == name) return true;
    return false;
}

bool matches_filter(const std::string& case_id, const std::string& filter) {
    if (filter.empty()) return true;
    std::stringstream ss(filter);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        // sugar: k=r=N -> both kN and rN must appear
        if (tok.rfind("k=r=", 0) == 0) {
            std::string n = tok.substr(4);
            if (case_id.find("k" + n) == std::string::npos) return false;
            if (case_id.find("r" + n) == std::string::npos) return false;
            continue;
        }
        if (case_id.find(tok) == std::string::npos) return false;
    }
    return true;
}

namespace {

struct Case {
    std::string id;
    std::function<VerificationReport()> run;
};

std::string fmt_num(double v) { return format_double(v); }

using P = std::vector<std::pair<std::string, std::string>>;

// An errored functional must fail its case visibly, not pass as 0 == 0.
double lhs_or_nan(const PairCheck& pc) {
    return pc.error ? std::numeric_limits<double>::quiet_NaN() : pc.lhs;
}

// --- individual suites -------------------------------------------------------

void suite_konhauser(const SuiteConfig& cfg, std::vector<Case>& out) {
    auto upss = cfg.get_ilist("konhauser.upsilons", {1, 2, 3});
    auto cs = cfg.get_list("konhauser.c", {-0.5, 0.0, 1.7});
    int kmax = cfg.get_i("konhauser.kmax", 6);
    double tol = cfg.get_d("konhauser.tol", 1e-9);
    for (int u : upss)
        for (double c : cs)
            for (int k = 0; k <= kmax; k++)
                for (int r = 0; r <= kmax; r++) {
                    std::string id = "u" + std::to_string(u) + "/c" + fmt_num(c) +
                                     "/k" + std::to_string(k) + "/r" +
                                     std::to_string(r) + "/pair";
                    out.push_back({id, [=] {
                        PairCheck pc = verify_konhauser_biorthogonality(k, r, c, u);
                        // quadrature roundoff scales with the integrand's
                        // term magnitudes, bounded by the larger diagonal
                        // norm, so off-diagonal cases measure against that
                        double dscale =
                            (slog_gamma(double(u) * std::max(k, r) + c + 1.0) /
                             slog_factorial(std::max(k, r))).value();
                        double tol_case =
                            k == r ? tol : tol * std::max(1.0, std::abs(dscale));
                        return make_report("konhauser", id,
                                           P{{"ups", std::to_string(u)},
                                             {"c", fmt_num(c)},
                                             {"k", std::to_string(k)},
                                             {"r", std::to_string(r)}},
                                           lhs_or_nan(pc), pc.rhs, tol_case,
                                           "quadrature");
                    }});
                }
}

void suite_m_orth(const SuiteConfig& cfg, std::vector<Case>& out) {
    double p = cfg.get_d("m_orth.p", 8.0);
    auto qs = cfg.get_list("m_orth.q", {-0.5, 0.0, 1.3});
    int kmax = cfg.get_i("m_orth.kmax", 3);
    double tol = cfg.get_d("m_orth.tol", 1e-10);
    for (double q : qs)
        for (int k = 0; k <= kmax; k++)
            for (int r = 0; r <= kmax; r++) {
                std::string id = "q" + fmt_num(q) + "/k" + std::to_string(k) +
                                 "/r" + std::to_string(r) + "/pair";
                out.push_back({id, [=] {
                    PairCheck pc = verify_M_orthogonality(k, r, p, q);
                    double dscale = M_orthogonality_norm(std::min(k, r), p, q);
                    double tol_case =
                        k == r ? tol : tol * std::max(1.0, std::abs(dscale));
                    return make_report("m-orth", id,
                                       P{{"p", fmt_num(p)},
                                         {"q", fmt_num(q)},
                                         {"k", std::to_string(k)},
                                         {"r", std::to_string(r)}},
                                       lhs_or_nan(pc), pc.rhs, tol_case,
                                       "quadrature");
                }});
            }
}

void suite_mk_biorth(const SuiteConfig& cfg, std::vector<Case>& out) {
    double p = cfg.get_d("mk.p", 8.0);
    double q = cfg.get_d("mk.q", 0.4);
    auto upss = cfg.get_ilist("mk.upsilons", {1, 2});
    int kmax = cfg.get_i("mk.kmax", 3);
    double tol = cfg.get_d("mk.tol", 1e-9);
    for (int u : upss)
        for (int k = 0; k <= kmax; k++)
            for (int r = 0; r <= kmax; r++) {
                std::string id = "u" + std::to_string(u) + "/k" +
                                 std::to_string(k) + "/r" + std::to_string(r) +
                                 "/hybrid";
                out.push_back({id, [=] {
                    PairCheck pc =
                        verify_MK_biorthogonality(k, r, p, q, u, BiMode::Hybrid);
                    double dscale = M_orthogonality_norm(std::min(k, r), p, q);
                    double tol_case =
                        k == r ? tol : tol * std::max(1.0, std::abs(dscale));
                    return make_report("mk-biorth", id,
                                       P{{"p", fmt_num(p)},
                                         {"q", fmt_num(q)},
                                         {"ups", std::to_string(u)},
                                         {"k", std::to_string(k)},
                                         {"r", std::to_string(r)}},
                                       lhs_or_nan(pc), pc.rhs, tol_case,
                                       "hybrid");
                }});
            }
    // numeric mode cross-check against hybrid where the z weight is literal
    double np = cfg.get_d("mk.numeric_p", 1.2);
    double nq = cfg.get_d("mk.numeric_q", -0.5);
    double ntol = cfg.get_d("mk.numeric_tol", 1e-8);
    for (int u : upss) {
        std::string id = "u" + std::to_string(u) + "/k0/r0/fully-numeric";
        out.push_back({id, [=] {
            PairCheck num =
                verify_MK_biorthogonality(0, 0, np, nq, u, BiMode::Numeric);
            PairCheck hyb =
                verify_MK_biorthogonality(0, 0, np, nq, u, BiMode::Hybrid);
            return make_report("mk-biorth", id,
                               P{{"p", fmt_num(np)},
                                 {"q", fmt_num(nq)},
                                 {"ups", std::to_string(u)},
                                 {"k", "0"},
                                 {"r", "0"}},
                               lhs_or_nan(num), lhs_or_nan(hyb), ntol,
                               "numeric-vs-hybrid");
        }});
    }
}

void suite_relations(const SuiteConfig& cfg, std::vector<Case>& out) {
    double p = cfg.get_d("rel.p", 12.5);
    double q = cfg.get_d("rel.q", 0.4);
    int u = cfg.get_i("rel.ups", 2);
    int kmax = cfg.get_i("rel.kmax", 5);
    double lo = cfg.get_d("rel.grid_lo", 0.2);
    double hi = cfg.get_d("rel.grid_hi", 2.0);
    int gn = cfg.get_i("rel.grid_n", 5);
    double tol = cfg.get_d("rel.tol", 1e-10);
    double mtol = cfg.get_d("rel.merel_tol", 1e-11);

    P base{{"p", fmt_num(p)}, {"q", fmt_num(q)}, {"ups", std::to_string(u)}};

    for (int k = 0; k <= kmax; k++) {
        for (int i = 0; i < gn; i++)
            for (int j = 0; j < gn; j++) {
                double y = lo + (hi - lo) * i / (gn - 1);
                double z = lo + (hi - lo) * j / (gn - 1);
                std::string pt = "/k" + std::to_string(k) + "/y" + fmt_num(y) +
                                 "/z" + fmt_num(z);
                P ps = base;
                ps.push_back({"k", std::to_string(k)});
                ps.push_back({"y", fmt_num(y)});
                ps.push_back({"z", fmt_num(z)});
                out.push_back({"fourway/kdf" + pt, [=] {
                    auto v = four_way_eval(k, p, q, u, y, z);
                    return make_report("relations", "fourway/kdf" + pt, ps, v[1],
                                       v[0], tol, "series");
                }});
                out.push_back({"fourway/oper" + pt, [=] {
                    auto v = four_way_eval(k, p, q, u, y, z);
                    return make_report("relations", "fourway/oper" + pt, ps, v[3],
                                       v[0], tol, "operational");
                }});
                out.push_back({"fourway/oper-bessel" + pt, [=] {
                    double direct = bivariate_MK(k, p, q, u).eval(y, z);
                    double besl = operational_rep_eval(k, p, q, u, y, z, 1);
                    return make_report("relations", "fourway/oper-bessel" + pt,
                                       ps, besl, direct, tol, "operational");
                }});
                out.push_back({"merel" + pt, [=] {
                    auto v = four_way_eval(k, p, q, u, y, z);
                    return make_report("relations", "merel" + pt, ps, v[2], v[0],
                                       mtol, "series");
                }});
            }
        // coefficient-level slice match to the stride partner family
        {
            std::string id = "zslice/k" + std::to_string(k);
            P ps = base;
            ps.push_back({"k", std::to_string(k)});
            out.push_back({id, [=] {
                double dev = mz_slice_deviation(k, p, q, u);
                return make_report("relations", id, ps, dev, 0.0, 1e-12,
                                   "coefficients");
            }});
        }
        // transition to the Jacobi-type family, both directions, plus the
        // z = 0 collapses
        for (auto [nm, fn] : std::initializer_list<
                 std::pair<const char*, double (*)(int, double, double, int,
                                                   double, double)>>{
                 {"transition/forward", &mj_forward_gap},
                 {"transition/inverse", &mj_inverse_gap}}) {
            std::string id = std::string(nm) + "/k" + std::to_string(k);
            P ps = base;
            ps.push_back({"k", std::to_string(k)});
            out.push_back({id, [=, f = fn] {
                double gap = f(k, p, q, u, 0.7, 1.3);
                return make_report("relations", id, ps, gap, 0.0, 1e-11, "values");
            }});
        }
        {
            std::string id = "reduce-z0/mk/k" + std::to_string(k);
            P ps = base;
            ps.push_back({"k", std::to_string(k)});
            out.push_back({id, [=] {
                return make_report("relations", id, ps,
                                   mk_z0_gap(k, p, q, u, 1.1), 0.0, 1e-12,
                                   "values");
            }});
            std::string id2 = "reduce-z0/jk/k" + std::to_string(k);
            out.push_back({id2, [=] {
                return make_report("relations", id2, ps,
                                   jk_z0_gap(k, 0.3, 0.6, u, 0.4), 0.0, 1e-12,
                                   "values");
            }});
        }
    }
}

void suite_genfun(const SuiteConfig& cfg, std::vector<Case>& out) {
    double p = cfg.get_d("genfun.p", 7.0);
    double q = cfg.get_d("genfun.q", 0.4);
    int u = cfg.get_i("genfun.ups", 2);
    double y = cfg.get_d("genfun.y", 0.3);
    double z = cfg.get_d("genfun.z", 0.5);
    double w = cfg.get_d("genfun.w", 0.1);
    auto Ns = cfg.get_ilist("genfun.N", {8, 15, 25});
    double tol = cfg.get_d("genfun.tol", 1e-8);

    for (int N : Ns) {
        std::string id = "partial/N" + std::to_string(N);
        out.push_back({id, [=] {
            GenFunResult g = check_generating_function(p, q, u, y, z, w, N);
            return make_report("genfun", id,
                               P{{"p", fmt_num(p)}, {"q", fmt_num(q)},
                                 {"ups", std::to_string(u)}, {"y", fmt_num(y)},
                                 {"z", fmt_num(z)}, {"w", fmt_num(w)},
                                 {"N", std::to_string(N)}},
                               g.lhs, g.rhs, tol, "series");
        }});
    }

    // non-truncating parameters: the partial-sum residual must decrease
    // strictly across the N ladder
    double tp = cfg.get_d("genfun.tail_p", 7.5);
    double ty = cfg.get_d("genfun.tail_y", 1.8);
    double tz = cfg.get_d("genfun.tail_z", 1.6);
    out.push_back({"tail/monotone", [=] {
        double resid[3];
        for (int i = 0; i < 3; i++) {
            GenFunResult g = check_generating_function(tp, q, u, ty, tz, w,
                                                       i == 0 ? 8 : i == 1 ? 15 : 25);
            resid[i] = std::abs(g.lhs - g.rhs) /
                       std::max(1.0, std::abs(g.rhs));
        }
        double worst_ratio =
            std::max(resid[1] / std::max(resid[0], 1e-300),
                     resid[2] / std::max(resid[1], 1e-300));
        return make_report("genfun", "tail/monotone",
                           P{{"p", fmt_num(tp)}, {"q", fmt_num(q)},
                             {"ups", std::to_string(u)}, {"y", fmt_num(ty)},
                             {"z", fmt_num(tz)}, {"w", fmt_num(w)},
                             {"resid8", fmt_num(resid[0])},
                             {"resid15", fmt_num(resid[1])},
                             {"resid25", fmt_num(resid[2])}},
                           worst_ratio, 0.0, 0.9, "series");
    }});
}

void suite_pde(const SuiteConfig& cfg, std::vector<Case>& out) {
    double p = cfg.get_d("pde.p", 7.0);
    double q = cfg.get_d("pde.q", 0.4);
    int kmax = cfg.get_i("pde.kmax", 5);
    int upsmax = cfg.get_i("pde.upsmax", 3);
    double tol = cfg.get_d("pde.tol", 1e-12);
    for (int u = 1; u <= upsmax; u++)
        for (int k = 0; k <= kmax; k++) {
            std::string id = "annihilate/u" + std::to_string(u) + "/k" +
                             std::to_string(k);
            out.push_back({id, [=] {
                BiProduct C = companion_MK(k, p, q, u);
                OperatorCheck oc = check_pde(C.tail, u);
                return make_report("pde", id,
                                   P{{"p", fmt_num(p)}, {"q", fmt_num(q)},
                                     {"ups", std::to_string(u)},
                                     {"k", std::to_string(k)},
                                     {"scale", fmt_num(oc.scale)}},
                                   oc.residual, 0.0,
                                   tol * std::max(1.0, oc.scale), "operator");
            }});
            std::string id2 = "lowering/u" + std::to_string(u) + "/k" +
                              std::to_string(k);
            out.push_back({id2, [=] {
                UniPoly Yk = konhauser_Y(k, -p - q, u);
                OperatorCheck oc = check_lowering_identity(Yk, u);
                return make_report("pde", id2,
                                   P{{"p", fmt_num(p)}, {"q", fmt_num(q)},
                                     {"ups", std::to_string(u)},
                                     {"k", std::to_string(k)},
                                     {"scale", fmt_num(oc.scale)}},
                                   oc.residual, 0.0,
                                   tol * std::max(1.0, oc.scale), "operator");
            }});
        }
}

void suite_laplace(const SuiteConfig& cfg, std::vector<Case>& out) {
    unsigned seed = unsigned(cfg.get_i("laplace.seed", 20250819));
    int ncases = cfg.get_i("laplace.cases", 20);
    double tol = cfg.get_d("laplace.tol", 1e-10);
    double btol = cfg.get_d("laplace.bessel_tol", 1e-12);
    std::mt19937 rng(seed);
    auto unif = [&](double a, double b) {
        return a + (b - a) * std::generate_canonical<double, 53>(rng);
    };
    for (int i = 0; i < ncases; i++) {
        int k = int(rng() % 4);
        int u = 1 + int(rng() % 3);
        double p = unif(7.5, 9.5);
        double q = unif(-0.9, 1.5);
        double a = unif(0.8, 2.0);
        double w = unif(0.1, 0.7) * a;
        double y = unif(0.0, 2.0);
        char buf[16];
        std::snprintf(buf, sizeof buf, "%02d", i);
        std::string id = std::string("1d/case") + buf + "/k" + std::to_string(k);
        P ps{{"k", std::to_string(k)}, {"ups", std::to_string(u)},
             {"p", fmt_num(p)},        {"q", fmt_num(q)},
             {"a", fmt_num(a)},        {"w", fmt_num(w)},
             {"y", fmt_num(y)}};
        out.push_back({id, [=] {
            double closed = laplace_z_closed(k, p, q, u, a, w, y);
            double term = laplace_z_termwise(k, p, q, u, a, w, y);
            return make_report("laplace", id, ps, closed, term, tol, "termwise");
        }});
        out.push_back({id + "/mform", [=] {
            double closed = laplace_z_closed(k, p, q, u, a, w, y);
            double mform = laplace_z_Mform(k, p, q, u, a, w, y);
            return make_report("laplace", id + "/mform", ps, mform, closed, btol,
                               "closed");
        }});
    }
    for (int i = 0; i < ncases; i++) {
        int k = int(rng() % 4);
        int u = 1 + int(rng() % 3);
        double p = unif(7.5, 9.5);
        double q = unif(-0.9, 1.5);
        double a = unif(0.8, 2.0);
        double b = unif(0.8, 2.0);
        double w1 = unif(0.1, 1.5);
        double w2 = unif(0.1, 0.7) * b;
        char buf[16];
        std::snprintf(buf, sizeof buf, "%02d", i);
        std::string id = std::string("2d/case") + buf + "/k" + std::to_string(k);
        P ps{{"k", std::to_string(k)}, {"ups", std::to_string(u)},
             {"p", fmt_num(p)},        {"q", fmt_num(q)},
             {"a", fmt_num(a)},        {"b", fmt_num(b)},
             {"w1", fmt_num(w1)},      {"w2", fmt_num(w2)}};
        out.push_back({id, [=] {
            double closed = laplace_2d_closed(k, p, q, u, a, b, w1, w2);
            double term = laplace_2d_termwise(k, p, q, u, a, b, w1, w2);
            return make_report("laplace", id, ps, closed, term, tol, "termwise");
        }});
        out.push_back({id + "/bessel", [=] {
            double closed = laplace_2d_closed(k, p, q, u, a, b, w1, w2);
            double besl = laplace_2d_bessel(k, p, q, u, a, b, w1, w2);
            return make_report("laplace", id + "/bessel", ps, besl, closed, btol,
                               "closed");
        }});
    }
    // degenerate slices: w1 = 0 factorizes through the 1D transform; w = 0
    // reduces the 1D transform to the pure power moment
    out.push_back({"2d/w1zero/k2", [=] {
        double closed = laplace_2d_closed(2, 8.0, 0.4, 2, 1.3, 1.6, 0.0, 0.9);
        double via1d = laplace_z_closed(2, 8.0, 0.4, 2, 1.6, 0.9, 0.0) *
                       gamma_r(1.4) / std::pow(1.3, 1.4);
        return make_report("laplace", "2d/w1zero/k2",
                           P{{"k", "2"}, {"p", "8"}, {"q", fmt_num(0.4)}},
                           closed, via1d, tol, "closed");
    }});
    out.push_back({"1d/wzero/k3", [=] {
        double closed = laplace_z_closed(3, 8.0, 0.4, 2, 1.5, 0.0, 0.8);
        double term = laplace_z_termwise(3, 8.0, 0.4, 2, 1.5, 0.0, 0.8);
        return make_report("laplace", "1d/wzero/k3",
                           P{{"k", "3"}, {"p", "8"}, {"q", fmt_num(0.4)}},
                           closed, term, tol, "termwise");
    }});
}

void suite_fractional(const SuiteConfig& cfg, std::vector<Case>& out) {
    double p = cfg.get_d("frac.p", 7.0);
    double q = cfg.get_d("frac.q", 0.4);
    int u = cfg.get_i("frac.ups", 2);
    int kmax = cfg.get_i("frac.kmax", 2);
    double x = cfg.get_d("frac.x", 0.8);
    double z = cfg.get_d("frac.z", 1.1);
    double tol = cfg.get_d("frac.tol", 1e-10);
    double rtol = cfg.get_d("frac.roundtrip_tol", 1e-9);

    struct Pair { double mu, lam; };
    const Pair ip{0.5, 0.3}, dp{0.3, 0.2};

    for (int k = 0; k <= kmax; k++) {
        P ps{{"p", fmt_num(p)},  {"q", fmt_num(q)},
             {"ups", std::to_string(u)}, {"k", std::to_string(k)},
             {"x", fmt_num(x)},  {"z", fmt_num(z)}};
        std::string id = "integral/mu" + fmt_num(ip.mu) + "/lam" +
                         fmt_num(ip.lam) + "/k" + std::to_string(k);
        out.push_back({id, [=] {
            FracCheck fc = frac_integral_shift(k, p, q, u, ip.mu, ip.lam, 1.0,
                                               1.0, 0.0, 0.0, x, z);
            return make_report("fractional", id, ps, fc.lhs, fc.rhs, tol,
                               "termwise");
        }});
        std::string id2 = "derivative/mu" + fmt_num(dp.mu) + "/lam" +
                          fmt_num(dp.lam) + "/k" + std::to_string(k);
        out.push_back({id2, [=] {
            FracCheck fc = frac_derivative_shift(k, p, q, u, dp.mu, dp.lam, 1.0,
                                                 1.0, 0.0, 0.0, x, z);
            return make_report("fractional", id2, ps, fc.lhs, fc.rhs, tol,
                               "termwise");
        }});
        std::string id3 = "roundtrip/k" + std::to_string(k);
        out.push_back({id3, [=] {
            double gap = frac_round_trip_gap(k, p, q, u, ip.mu, ip.lam, 1.0,
                                             1.0, 0.0, 0.0, x, z);
            return make_report("fractional", id3, ps, gap, 0.0, rtol,
                               "termwise");
        }});
        std::string id4 = "integer-order/k" + std::to_string(k);
        out.push_back({id4, [=] {
            double gap = frac_integer_order_gap(k, p, q, u, 1.0, 1.0, 0.0, 0.0,
                                                x, z);
            return make_report("fractional", id4, ps, gap, 0.0, 1e-12,
                               "termwise");
        }});
    }
    // monomial actions at integer order against gamma-free arithmetic
    out.push_back({"monomial/integral", [=] {
        double via = rl_integral_monomial(1.7, 1.0, 0.2, 1.5);
        double plain = std::pow(1.3, 2.7) / 2.7;
        return make_report("fractional", "monomial/integral",
                           P{{"beta", fmt_num(1.7)}, {"sigma", "1"}}, via, plain,
                           1e-13, "monomial");
    }});
    out.push_back({"monomial/derivative", [=] {
        double via = rl_derivative_monomial(1.7, 1.0, 0.2, 1.5);
        double plain = 1.7 * std::pow(1.3, 0.7);
        return make_report("fractional", "monomial/derivative",
                           P{{"beta", fmt_num(1.7)}, {"sigma", "1"}}, via, plain,
                           1e-13, "monomial");
    }});
}

void suite_fourier(const SuiteConfig& cfg, std::vector<Case>& out) {
    double p1 = cfg.get_d("fourier.p1", 1.0 / 6.0);
    double q1 = cfg.get_d("fourier.q1", 1.0 / 6.0);
    double beta = cfg.get_d("fourier.beta", -0.8);
    double alpha0 = cfg.get_d("fourier.alpha0", 1.4);
    double alpha1 = cfg.get_d("fourier.alpha1", 2.0);
    int u = cfg.get_i("fourier.ups", 2);
    double dtol = cfg.get_d("fourier.tol_direct", 1e-6);
    auto fx1 = cfg.get_list("fourier.freq_x1", {0.0, 0.5, 1.0, -0.3, 2.0});
    auto fx2 = cfg.get_list("fourier.freq_x2", {0.0, 0.5, -0.7, 1.2, 0.4});

    for (int k = 0; k <= 1; k++) {
        double alpha = k == 0 ? alpha0 : alpha1;
        for (size_t f = 0; f < fx1.size(); f++) {
            std::string id = "direct/left/k" + std::to_string(k) + "/f" +
                             std::to_string(f);
            P ps{{"k", std::to_string(k)},   {"p1", fmt_num(p1)},
                 {"q1", fmt_num(q1)},        {"alpha", fmt_num(alpha)},
                 {"beta", fmt_num(beta)},    {"ups", std::to_string(u)},
                 {"x1", fmt_num(fx1[f])},    {"x2", fmt_num(fx2[f])}};
            out.push_back({id, [=] {
                cplx closed = fourier_closed_left(k, p1, q1, alpha, beta, u,
                                                  fx1[f], fx2[f]);
                CplxResult direct = fourier_direct_left(k, p1, q1, alpha, beta,
                                                        u, fx1[f], fx2[f]);
                return make_report_complex("fourier", id, ps,
                                           direct.value.real(),
                                           direct.value.imag(), closed.real(),
                                           closed.imag(), dtol, "direct");
            }});
        }
    }
    for (int r = 0; r <= 1; r++) {
        double gamma = r == 0 ? alpha0 : alpha1;
        for (size_t f = 0; f < fx1.size(); f++) {
            std::string id = "direct/right/r" + std::to_string(r) + "/f" +
                             std::to_string(f);
            P ps{{"r", std::to_string(r)},   {"p2", fmt_num(p1)},
                 {"q2", fmt_num(q1)},        {"gamma", fmt_num(gamma)},
                 {"delta", fmt_num(beta)},   {"ups", std::to_string(u)},
                 {"x1", fmt_num(fx1[f])},    {"x2", fmt_num(fx2[f])}};
            out.push_back({id, [=] {
                cplx closed = fourier_closed_right(r, p1, q1, gamma, beta, u,
                                                   fx1[f], fx2[f]);
                CplxResult direct = fourier_direct_right(r, p1, q1, gamma, beta,
                                                         u, fx1[f], fx2[f]);
                return make_report_complex("fourier", id, ps,
                                           direct.value.real(),
                                           direct.value.imag(), closed.real(),
                                           closed.imag(), dtol, "direct");
            }});
        }
    }

    // frequency-side biorthogonality at the tied parameters
    double bp1 = cfg.get_d("fourier.bi_p1", 0.2);
    double bq1 = cfg.get_d("fourier.bi_q1", 0.1);
    double bp2 = cfg.get_d("fourier.bi_p2", 0.2);
    double bq2 = cfg.get_d("fourier.bi_q2", 0.1);
    int bkmax = cfg.get_i("fourier.bi_kmax", 2);
    double tol_diag = cfg.get_d("fourier.bi_tol_diag", 1e-5);
    double tol_off = cfg.get_d("fourier.bi_tol_off", 1e-6);
    XiQuadOpts xo;
    xo.L1 = cfg.get_d("fourier.L1", 16.0);
    xo.L2 = cfg.get_d("fourier.L2", 26.0);
    for (int k = 0; k <= bkmax; k++)
        for (int r = 0; r <= bkmax; r++) {
            std::string id = "biorth/k" + std::to_string(k) + "/r" +
                             std::to_string(r);
            P ps{{"p1", fmt_num(bp1)}, {"q1", fmt_num(bq1)},
                 {"p2", fmt_num(bp2)}, {"q2", fmt_num(bq2)},
                 {"ups", std::to_string(u)}, {"k", std::to_string(k)},
                 {"r", std::to_string(r)}};
            out.push_back({id, [=] {
                BiorthResult br = verify_fourier_biorthogonality(
                    k, r, bp1, bq1, bp2, bq2, u, xo);
                double dscale = std::abs(
                    fourier_biorth_norm(std::min(k, r), bp1, bq1, bp2, bq2));
                double tol_case = k == r
                                      ? tol_diag
                                      : tol_off * std::max(1.0, dscale);
                return make_report_complex("fourier", id, ps, br.lhs.real(),
                                           br.lhs.imag(), br.rhs, 0.0, tol_case,
                                           "xi-quadrature");
            }});
        }

    // Plancherel-type consistency between the two sides of the pairing
    for (auto [k, r] : {std::pair<int, int>{0, 0}, {0, 1}}) {
        std::string id = "parseval/k" + std::to_string(k) + "/r" +
                         std::to_string(r);
        P ps{{"p1", fmt_num(bp1)}, {"q1", fmt_num(bq1)},
             {"p2", fmt_num(bp2)}, {"q2", fmt_num(bq2)},
             {"ups", std::to_string(u)}, {"k", std::to_string(k)},
             {"r", std::to_string(r)}};
        out.push_back({id, [=] {
            ParsevalResult pr = parseval_consistency(k, r, bp1, bq1, bp2, bq2,
                                                     u, xo);
            double scale = std::abs(parseval_consistency(
                                        std::min(k, r), std::min(k, r), bp1,
                                        bq1, bp2, bq2, u, xo).position);
            double tol_case = k == r ? 1e-5 : 1e-6 * std::max(1.0, scale);
            return make_report_complex("fourier", id, ps, pr.frequency.real(),
                                       pr.frequency.imag(), pr.position, 0.0,
                                       tol_case, "parseval");
        }});
    }

    // measure sanity and the gamma decay used to choose the cutoffs
    out.push_back({"weight/positivity", [=] {
        double mn = weight_min_on_grid(bp1 + bp2 + 1.0, bq1 + bq2 - 1.0);
        double ok = (mn > 0.0 && std::isfinite(mn)) ? 1.0 : 0.0;
        return make_report("fourier", "weight/positivity",
                           P{{"min", fmt_num(mn)}}, ok, 1.0, 0.0, "grid");
    }});
    for (double t : {5.0, 10.0, 20.0}) {
        std::string id = "gamma-decay/t" + fmt_num(t);
        out.push_back({id, [=] {
            double ratio = gamma_decay_ratio(bp1, t);
            return make_report("fourier", id, P{{"sigma", fmt_num(bp1)},
                                                {"t", fmt_num(t)}},
                               ratio, 1.0, 0.01, "bound");
        }});
    }
}

} // namespace

std::vector<VerificationReport> run_suites(const SuiteRun& run,
                                           const SuiteConfig& cfg) {
    std::vector<std::string> names;
    for (const auto& n : run.names) {
        if (n == "all") {
            auto all = all_suite_names();
            names.insert(names.end(), all.begin(), all.end());
        } else {
            names.push_back(n);
        }
    }

    std::vector<Case> cases;
    std::vector<std::string> suite_of;
    for (const auto& n : names) {
        std::vector<Case> cs;
        if (n == "konhauser") suite_konhauser(cfg, cs);
        else if (n == "m-orth") suite_m_orth(cfg, cs);
        else if (n == "mk-biorth") suite_mk_biorth(cfg, cs);
        else if (n == "relations") suite_relations(cfg, cs);
        else if (n == "genfun") suite_genfun(cfg, cs);
        else if (n == "pde") suite_pde(cfg, cs);
        else if (n == "laplace") suite_laplace(cfg, cs);
        else if (n == "fractional") suite_fractional(cfg, cs);
        else if (n == "fourier") suite_fourier(cfg, cs);
        for (auto& c : cs)
            if (matches_filter(c.id, run.filter)) cases.push_back(std::move(c));
    }

    std::vector<VerificationReport> rows(cases.size());
    int nthreads = std::max(1, run.threads);
    if (nthreads == 1) {
        for (size_t i = 0; i < cases.size(); i++) rows[i] = cases[i].run();
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= cases.size()) return;
                rows[i] = cases[i].run();
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; t++) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    if (run.tol_override >= 0.0) {
        for (auto& r : rows) {
            r.tol = run.tol_override;
            double rhs_mag = std::hypot(r.rhs_re, r.rhs_im);
            r.pass = r.abs_err <= r.tol * std::max(1.0, rhs_mag);
        }
    }

    sort_reports(rows);
    return rows;
}

} // namespace mkon
