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

#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

#include "cusplab/cusplab.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    cusplab_string_free(s);
    return out;
}

}  // namespace

TEST(CApi, VerifyReport) {
    cusplab_verify_options o;
    cusplab_verify_options_default(&o);
    EXPECT_EQ(o.qmax, 7);
    EXPECT_EQ(o.seed, 42u);
    o.qmax = 5;
    o.nmax = 1;
    cusplab_report* r = nullptr;
    ASSERT_EQ(cusplab_verify("gauss,classify", &o, &r), CUSPLAB_OK);
    ASSERT_NE(r, nullptr);
    EXPECT_EQ(cusplab_report_passed(r), 1);
    EXPECT_EQ(cusplab_report_failure_count(r), 0u);
    char* s = nullptr;
    ASSERT_EQ(cusplab_report_json(r, 2, &s), CUSPLAB_OK);
    const auto j = nlohmann::json::parse(take(s));
    EXPECT_EQ(j["suites"].size(), 2u);
    EXPECT_TRUE(j["pass"].get<bool>());
    ASSERT_EQ(cusplab_report_text(r, &s), CUSPLAB_OK);
    EXPECT_NE(take(s).find("PASS gauss"), std::string::npos);
    cusplab_report_free(r);
}

TEST(CApi, UsageErrors) {
    cusplab_report* r = nullptr;
    EXPECT_EQ(cusplab_verify("bogus", nullptr, &r), CUSPLAB_E_USAGE);
    EXPECT_EQ(r, nullptr);
    EXPECT_NE(std::string(cusplab_last_error()).find("bogus"), std::string::npos);
    EXPECT_EQ(cusplab_verify("gauss", nullptr, nullptr), CUSPLAB_E_USAGE);
    cusplab_verify_options o;
    cusplab_verify_options_default(&o);
    o.qmax = 9;
    EXPECT_EQ(cusplab_verify("gauss", &o, &r), CUSPLAB_E_USAGE);
    cusplab_jordan* j = nullptr;
    EXPECT_EQ(cusplab_jordan_compute(1, 9, 1, &j), CUSPLAB_E_USAGE);
    EXPECT_EQ(cusplab_jordan_compute(1, 3, 0, &j), CUSPLAB_E_USAGE);
    EXPECT_EQ(cusplab_jordan_compute(0, 3, 1, &j), CUSPLAB_E_USAGE);
    char* s = nullptr;
    EXPECT_EQ(cusplab_hecke("gl3-b1", 3, 1, "quadratic", 1, 1, 1000000, 0, &s), CUSPLAB_E_USAGE);
    EXPECT_EQ(cusplab_hecke("gl1-b1", 3, 1, "cubic", 1, 1, 1000000, 0, &s), CUSPLAB_E_USAGE);
    EXPECT_EQ(cusplab_hecke("gl1-b1", 3, 1, "quadratic", 3, 1, 1000000, 0, &s), CUSPLAB_E_USAGE);
    EXPECT_EQ(s, nullptr);
    // handles may be null
    cusplab_report_free(nullptr);
    cusplab_jordan_free(nullptr);
    cusplab_string_free(nullptr);
}

TEST(CApi, Budget) {
    char* s = nullptr;
    EXPECT_EQ(cusplab_hecke("gl2n-b1", 7, 3, "quadratic", 1, 1, 1000, 1, &s), CUSPLAB_E_BUDGET);
    EXPECT_NE(std::string(cusplab_last_error()).find("budget"), std::string::npos);
}

TEST(CApi, Jordan) {
    cusplab_jordan* j = nullptr;
    ASSERT_EQ(cusplab_jordan_compute(2, 3, 1, &j), CUSPLAB_OK);
    EXPECT_EQ(cusplab_jordan_all_ok(j), 1);
    char* s = nullptr;
    ASSERT_EQ(cusplab_jordan_json(j, 2, &s), CUSPLAB_OK);
    const auto o = nlohmann::json::parse(take(s));
    EXPECT_EQ(o["eps1_on_norms"], "-1");
    EXPECT_EQ(o["tau_beta"], "-i");
    ASSERT_EQ(cusplab_jordan_text(j, &s), CUSPLAB_OK);
    EXPECT_FALSE(take(s).empty());
    cusplab_jordan_free(j);
}

TEST(CApi, HeckeCases) {
    char* s = nullptr;
    ASSERT_EQ(cusplab_hecke("gl2n-b1", 3, 2, "quadratic", 1, 1, 100000000, 1, &s), CUSPLAB_OK);
    auto o = nlohmann::json::parse(take(s));
    EXPECT_EQ(o["ray_class"], "i");
    EXPECT_EQ(o["reduction"]["status"], "PASS");
    ASSERT_EQ(cusplab_hecke("gl2n-b1", 3, 2, "trivial", 1, 1, 100000000, 1, &s), CUSPLAB_OK);
    o = nlohmann::json::parse(take(s));
    EXPECT_EQ(o["ray_class"], "0");
    EXPECT_EQ(o["note"], "no reducibility at 1");
    for (const char* c : {"gl1-b0", "gl1-b1", "gl2n-b0"}) {
        ASSERT_EQ(cusplab_hecke(c, 7, 1, "quadratic", 2, -1, 1000, 0, &s), CUSPLAB_OK) << c;
        EXPECT_NE(take(s).find("PASS"), std::string::npos);
    }
}

TEST(CApi, GaussAndClassify) {
    char* s = nullptr;
    ASSERT_EQ(cusplab_gauss(7, 1, &s), CUSPLAB_OK);
    auto o = nlohmann::json::parse(take(s));
    EXPECT_EQ(o["xi"], "i");
    EXPECT_EQ(o["xi_squared"], "-1");
    ASSERT_EQ(cusplab_classify(5, 1, 1, &s), CUSPLAB_OK);
    o = nlohmann::json::parse(take(s));
    EXPECT_EQ(o["orbits"], 8);
    EXPECT_EQ(o["cuspidal_count"], 16);
    EXPECT_EQ(o["representatives"].size(), 8u);
    EXPECT_EQ(cusplab_classify(29, 1, 0, &s), CUSPLAB_E_USAGE);
}
