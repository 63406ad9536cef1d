// Canonical verification suites: named case grids over the library's checks,
// configured by a small key=value file, executed deterministically (fixed
// seeds, sorted output) and optionally in parallel.

#pragma once

#include <map>

#include "mkon/report.hpp"

namespace mkon {

struct SuiteConfig {
    std::map<std::string, std::string> kv;

    static SuiteConfig defaults();
    // key=value lines, '#' comments; unknown keys are kept (forward compat)
    static SuiteConfig load(const std::string& path, std::string* err = nullptr);

    double get_d(const std::string& key, double dflt) const;
    int get_i(const std::string& key, int dflt) const;
    std::vector<double> get_list(const std::string& key,
                                 const std::vector<double>& dflt) const;
    std::vector<int> get_ilist(const std::string& key,
                               const std::vector<int>& dflt) const;
};

struct SuiteRun {
    std::vector<std::string> names; // suites to run, expanded from "all"
    double tol_override = -1.0;     // < 0 keeps per-case tolerances
    int threads = 1;
    std::string filter;             // comma list; see matches_filter
};

bool known_suite(const std::string& name);
std::vector<std::string> all_suite_names();

// Token list semantics: every comma-separated token must match the case id
// as a substring; the sugar "k=r=N" expands to the pair of tokens kN and rN.
bool matches_filter(const std::string& case_id, const std::string& filter);

std::vector<VerificationReport> run_suites(const SuiteRun& run,
                                           const SuiteConfig& cfg);

} // namespace mkon
