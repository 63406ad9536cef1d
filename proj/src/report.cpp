#include "mkon/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace mkon {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_sig15(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

VerificationReport make_report(std::string suite, std::string case_id,
                               std::vector<std::pair<std::string, std::string>> params,
                               double lhs, double rhs, double tol,
                               std::string mode) {
    return make_report_complex(std::move(suite), std::move(case_id),
                               std::move(params), lhs, 0.0, rhs, 0.0, tol,
                               std::move(mode));
}

VerificationReport make_report_complex(std::string suite, std::string case_id,
                                       std::vector<std::pair<std::string, std::string>> params,
                                       double lhs_re, double lhs_im,
                                       double rhs_re, double rhs_im,
                                       double tol, std::string mode) {
    VerificationReport r;
    r.suite = std::move(suite);
    r.case_id = std::move(case_id);
    r.params = std::move(params);
    r.lhs_re = lhs_re;
    r.lhs_im = lhs_im;
    r.rhs_re = rhs_re;
    r.rhs_im = rhs_im;
    r.complex_valued = lhs_im != 0.0 || rhs_im != 0.0;
    r.abs_err = std::hypot(lhs_re - rhs_re, lhs_im - rhs_im);
    double rhs_mag = std::hypot(rhs_re, rhs_im);
    r.rel_err = r.abs_err / std::max(rhs_mag, 1.0);
    r.tol = tol;
    r.mode = std::move(mode);
    r.pass = r.abs_err <= tol * std::max(1.0, rhs_mag);
    return r;
}

void sort_reports(std::vector<VerificationReport>& rows) {
    std::sort(rows.begin(), rows.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  if (a.suite != b.suite) return a.suite < b.suite;
                  return a.case_id < b.case_id;
              });
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') {
            out += '\\';
            out += ch;
        } else {
            out += ch;
        }
    }
    return out;
}

void append_value(std::string& out, double re, double im, bool complex_valued) {
    if (!complex_valued) {
        out += format_double(re);
    } else {
        out += "{\"re\":";
        out += format_double(re);
        out += ",\"im\":";
        out += format_double(im);
        out += "}";
    }
}

} // namespace

std::string to_jsonl(const std::vector<VerificationReport>& rows,
                     const std::string& suite_label) {
    std::string out = "{\"record\":\"meta\",\"tool\":\"mkon\",\"suite\":\"" +
                      json_escape(suite_label) + "\",\"cases\":" +
                      std::to_string(rows.size()) + "}\n";
    for (const auto& r : rows) {
        out += "{\"suite\":\"" + json_escape(r.suite) + "\"";
        out += ",\"case_id\":\"" + json_escape(r.case_id) + "\"";
        out += ",\"params\":{";
        for (size_t i = 0; i < r.params.size(); i++) {
            if (i) out += ",";
            out += "\"" + json_escape(r.params[i].first) + "\":\"" +
                   json_escape(r.params[i].second) + "\"";
        }
        out += "},\"lhs\":";
        append_value(out, r.lhs_re, r.lhs_im, r.complex_valued);
        out += ",\"rhs\":";
        append_value(out, r.rhs_re, r.rhs_im, r.complex_valued);
        out += ",\"abs_err\":" + format_double(r.abs_err);
        out += ",\"rel_err\":" + format_double(r.rel_err);
        out += ",\"tol\":" + format_double(r.tol);
        out += ",\"mode\":\"" + json_escape(r.mode) + "\"";
        out += std::string(",\"pass\":") + (r.pass ? "true" : "false") + "}\n";
    }
    return out;
}

std::string to_csv(const std::vector<VerificationReport>& rows) {
    std::string out =
        "suite,case_id,params,lhs,rhs,abs_err,rel_err,tol,mode,pass\n";
    for (const auto& r : rows) {
        out += r.suite + "," + r.case_id + ",";
        std::string ps;
        for (size_t i = 0; i < r.params.size(); i++) {
            if (i) ps += ";";
            ps += r.params[i].first + "=" + r.params[i].second;
        }
        out += ps + ",";
        if (r.complex_valued) {
            out += format_double(r.lhs_re) + "+" + format_double(r.lhs_im) + "i,";
            out += format_double(r.rhs_re) + "+" + format_double(r.rhs_im) + "i,";
        } else {
            out += format_double(r.lhs_re) + ",";
            out += format_double(r.rhs_re) + ",";
        }
        out += format_double(r.abs_err) + "," + format_double(r.rel_err) + "," +
               format_double(r.tol) + "," + r.mode + "," +
               (r.pass ? "true" : "false") + "\n";
    }
    return out;
}

} // namespace mkon
