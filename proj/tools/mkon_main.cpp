// mkon: evaluate the polynomial families, tabulate them over grids, and run
// the verification suites.
//
// Exit codes: 0 success, 1 verification failures, 2 usage or validation.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mkon/poly.hpp"
#include "mkon/report.hpp"
#include "mkon/suites.hpp"

namespace {

using mkon::Params;
using mkon::UniPoly;

struct KV {
    std::map<std::string, double> vals;
    std::string err;

    bool parse(const std::vector<std::string>& tokens) {
        for (const auto& t : tokens) {
            auto eq = t.find('=');
            if (eq == std::string::npos || eq == 0) {
                err = "expected key=value, got '" + t + "'";
                return false;
            }
            std::string key = t.substr(0, eq);
            std::string val = t.substr(eq + 1);
            try {
                size_t used = 0;
                double v = std::stod(val, &used);
                if (used != val.size()) throw std::invalid_argument(val);
                vals[key] = v;
            } catch (const std::exception&) {
                err = "cannot parse value for '" + key + "': '" + val + "'";
                return false;
            }
        }
        return true;
    }

    bool has(const std::string& k) const { return vals.count(k) != 0; }
    double get(const std::string& k, double dflt) const {
        auto it = vals.find(k);
        return it == vals.end() ? dflt : it->second;
    }
    // require() collects the missing-key message instead of throwing so the
    // caller can report every problem at once
    double require(const std::string& k) {
        auto it = vals.find(k);
        if (it == vals.end()) {
            if (!err.empty()) err += "; ";
            err += "missing required parameter '" + k + "'";
            return 0.0;
        }
        return it->second;
    }
};

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

// Family evaluation shared by eval and table.  Bivariate families ignore
// neither argument; univariate ones ignore z.
struct FamilyEval {
    bool bivariate = false;
    std::function<double(double, double)> fn;
    std::string err;
};

FamilyEval make_family_eval(std::string family, KV& kv) {
    std::transform(family.begin(), family.end(), family.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });
    FamilyEval fe;
    auto fail = [&](const std::string& m) {
        fe.err = m;
        return fe;
    };

    if (family == "mittag-leffler") {
        double g1 = kv.require("g1"), g2 = kv.require("g2");
        double a = kv.require("a"), b = kv.require("b");
        int ups = int(kv.get("ups", 1));
        if (!kv.err.empty()) return fail(kv.err);
        if (ups < 1 || ups > 8) return fail("ups must lie in [1, 8]");
        fe.bivariate = true;
        fe.fn = [=](double y, double z) {
            auto r = mkon::mittag_leffler(g1, g2, a, b, ups, y, z);
            return r.value;
        };
        return fe;
    }

    Params pr;
    pr.k = int(kv.require("k"));
    pr.ups = int(kv.get("ups", 1));

    const bool uses_c = (family == "z" || family == "y");
    if (uses_c) {
        double c = kv.require("c");
        if (!kv.err.empty()) return fail(kv.err);
        pr.p = 0.0;
        pr.q = c;
        if (auto e = mkon::validate_common(pr)) return fail(*e);
        UniPoly g = family == "z" ? mkon::konhauser_Z(pr.k, c, pr.ups)
                                  : mkon::konhauser_Y(pr.k, c, pr.ups);
        fe.fn = [g](double y, double) { return g.eval(y); };
        return fe;
    }

    pr.p = kv.require("p");
    pr.q = kv.require("q");
    if (!kv.err.empty()) return fail(kv.err);
    if (auto e = mkon::validate_common(pr)) return fail(*e);

    if (family == "m") {
        UniPoly g = mkon::finite_M(pr.k, pr.p, pr.q);
        fe.fn = [g](double y, double) { return g.eval(y); };
    } else if (family == "jacobi") {
        UniPoly g = mkon::jacobi_P(pr.k, pr.p, pr.q);
        fe.fn = [g](double y, double) { return g.eval(y); };
    } else if (family == "mk") {
        auto g = mkon::bivariate_MK(pr.k, pr.p, pr.q, pr.ups);
        fe.bivariate = true;
        fe.fn = [g](double y, double z) { return g.eval(y, z); };
    } else if (family == "mcal") {
        auto g = mkon::companion_MK(pr.k, pr.p, pr.q, pr.ups);
        fe.bivariate = true;
        fe.fn = [g](double y, double z) { return g.eval(y, z); };
    } else if (family == "jk") {
        auto g = mkon::bivariate_JK(pr.k, pr.p, pr.q, pr.ups);
        fe.bivariate = true;
        fe.fn = [g](double y, double z) { return g.eval(y, z); };
    } else if (family == "jkq") {
        auto g = mkon::companion_JK(pr.k, pr.p, pr.q, pr.ups);
        fe.bivariate = true;
        fe.fn = [g](double y, double z) { return g.eval(y, z); };
    } else {
        return fail("unknown family '" + family +
                    "' (choose z, y, m, jacobi, mk, mcal, jk, jkq, "
                    "mittag-leffler)");
    }
    return fe;
}

int run_eval(const std::string& family, const std::vector<std::string>& tokens) {
    KV kv;
    if (!kv.parse(tokens)) return usage_error(kv.err);
    FamilyEval fe = make_family_eval(family, kv);
    if (!fe.err.empty()) return usage_error(fe.err);
    double y = kv.get("y", 0.0);
    double z = kv.get("z", 0.0);
    std::printf("%s\n", mkon::format_sig15(fe.fn(y, z)).c_str());
    return 0;
}

int run_table(const std::string& family, const std::vector<std::string>& tokens) {
    KV kv;
    if (!kv.parse(tokens)) return usage_error(kv.err);
    FamilyEval fe = make_family_eval(family, kv);
    if (!fe.err.empty()) return usage_error(fe.err);

    double y0 = kv.get("y0", 0.0), y1 = kv.get("y1", y0);
    double z0 = kv.get("z0", 0.0), z1 = kv.get("z1", z0);
    int ny = int(kv.get("ny", 1)), nz = int(kv.get("nz", 1));
    if (ny < 1 || nz < 1) return usage_error("ny and nz must be at least 1");

    std::printf("y,z,value\n");
    for (int i = 0; i < ny; i++) {
        double y = ny == 1 ? y0 : y0 + (y1 - y0) * i / (ny - 1);
        for (int j = 0; j < nz; j++) {
            double z = nz == 1 ? z0 : z0 + (z1 - z0) * j / (nz - 1);
            std::printf("%s,%s,%s\n", mkon::format_double(y).c_str(),
                        mkon::format_double(z).c_str(),
                        mkon::format_sig15(fe.fn(y, z)).c_str());
        }
    }
    return 0;
}

int run_verify(const std::vector<std::string>& suites, const std::string& filter,
               const std::string& config_path, const std::string& out_path,
               const std::string& format, double tol_override, int threads) {
    mkon::SuiteRun run;
    for (const auto& s : suites) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            if (!mkon::known_suite(tok))
                return usage_error("unknown suite '" + tok + "'");
            run.names.push_back(tok);
        }
    }
    if (run.names.empty()) run.names.push_back("all");
    run.filter = filter;
    run.tol_override = tol_override;
    run.threads = threads;

    if (format != "jsonl" && format != "csv")
        return usage_error("format must be jsonl or csv");

    mkon::SuiteConfig cfg;
    if (!config_path.empty()) {
        std::string err;
        cfg = mkon::SuiteConfig::load(config_path, &err);
        if (!err.empty()) return usage_error(err);
    }

    auto rows = mkon::run_suites(run, cfg);

    std::string label;
    for (size_t i = 0; i < run.names.size(); i++)
        label += (i ? "," : "") + run.names[i];
    std::string text =
        format == "jsonl" ? mkon::to_jsonl(rows, label) : mkon::to_csv(rows);

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) return usage_error("cannot open output file: " + out_path);
        out << text;
    } else {
        std::cout << text;
    }

    size_t failed = 0;
    for (const auto& r : rows)
        if (!r.pass) failed++;
    std::fprintf(stderr, "%zu cases, %zu failed\n", rows.size(), failed);
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"biorthogonal polynomial families: evaluation and verification"};
    app.require_subcommand(1);

    std::string family;
    std::vector<std::string> tokens;

    auto* eval = app.add_subcommand("eval", "print one value");
    eval->add_option("family", family)->required();
    eval->add_option("params", tokens, "key=value parameters");

    auto* table = app.add_subcommand("table", "CSV grid of values, y-major");
    table->add_option("family", family)->required();
    table->add_option("params", tokens,
                      "key=value parameters plus y0,y1,ny,z0,z1,nz");

    std::vector<std::string> suites;
    std::string filter, config_path, out_path, format = "jsonl";
    double tol_override = -1.0;
    int threads = 1;

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suites, "suite name or comma list");
    verify->add_option("--filter", filter, "case-id substring tokens");
    verify->add_option("--config", config_path, "key=value config file");
    verify->add_option("--out", out_path, "report file (default stdout)");
    verify->add_option("--format", format, "jsonl or csv");
    verify->add_option("--tol", tol_override, "override every case tolerance");
    verify->add_option("--threads", threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (eval->parsed()) return run_eval(family, tokens);
    if (table->parsed()) return run_table(family, tokens);
    return run_verify(suites, filter, config_path, out_path, format,
                      tol_override, threads);
}
