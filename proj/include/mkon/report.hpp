// Verification records and their serialization.
//
// Byte-determinism is a contract: runs with the same inputs must produce
// identical report files regardless of thread count.  Doubles are printed
// with std::to_chars (shortest round-trip form), rows are sorted by case id,
// and the only metadata row carries no timestamps.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mkon {

struct VerificationReport {
    std::string suite;
    std::string case_id;
    std::vector<std::pair<std::string, std::string>> params;
    double lhs_re = 0.0, lhs_im = 0.0;
    double rhs_re = 0.0, rhs_im = 0.0;
    bool complex_valued = false;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    std::string mode;
    bool pass = false;
};

// pass <=> abs_err <= tol * max(1, |rhs|); rel_err shares the same
// denominator, so rel_err <= tol exactly when the case passes.
VerificationReport make_report(std::string suite, std::string case_id,
                               std::vector<std::pair<std::string, std::string>> params,
                               double lhs, double rhs, double tol,
                               std::string mode);
VerificationReport make_report_complex(std::string suite, std::string case_id,
                                       std::vector<std::pair<std::string, std::string>> params,
                                       double lhs_re, double lhs_im,
                                       double rhs_re, double rhs_im,
                                       double tol, std::string mode);

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

// Fixed significant-digit form used by the eval command.
std::string format_sig15(double v);

void sort_reports(std::vector<VerificationReport>& rows);

std::string to_jsonl(const std::vector<VerificationReport>& rows,
                     const std::string& suite_label);
std::string to_csv(const std::vector<VerificationReport>& rows);

} // namespace mkon
