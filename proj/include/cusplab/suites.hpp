/*
 * Copyright 2026 The cusplab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cusplab {

struct CaseFailure {
    std::string key;   // e.g. "q=5 N=2"
    std::string what;  // the identity that failed
    std::string lhs, rhs;
};

struct SuiteReport {
    std::string name;
    std::uint64_t cases = 0;
    std::vector<CaseFailure> failures;
    std::vector<std::pair<std::string, std::string>> summary;  // headline values, in run order
    double wall_ms = 0;

    bool ok() const { return failures.empty(); }
    /// counts one case; records a failure when !pass
    bool check(bool pass, const std::string& key, const std::string& what, const std::string& lhs = "",
               const std::string& rhs = "");
};

struct VerifyOptions {
    long qmax = 7;
    long nmax = 3;
    std::uint64_t seed = 42;
    unsigned threads = 0;                   // 0: CUSPLAB_THREADS / hardware
    std::uint64_t term_budget = 100000000;  // character sums
    std::uint64_t decomp_instances = 1000;  // per solver per (q, N)
    long relprec = 12;                      // series inversions in the solvers
};

/// gauss zolotarev lattice beta decomp hecke classify jordan method
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& s);

/// throws Error(InvalidArgument) on bad options, Error(Budget) when a sum
/// exceeds the budget
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);
/// "all" expands to every suite, in suite_names() order
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const VerifyOptions& opt);

std::string reports_json(const std::vector<SuiteReport>& r, const VerifyOptions& opt, int indent = 2);
std::string reports_text(const std::vector<SuiteReport>& r);

/// odd primes <= qmax
std::vector<int> odd_primes_upto(long qmax);

}  // namespace cusplab
