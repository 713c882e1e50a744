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

#include <gtest/gtest.h>

#include "json.hpp"

#include "cusplab/error.hpp"
#include "cusplab/suites.hpp"

using namespace cusplab;

namespace {

VerifyOptions small() {
    VerifyOptions o;
    o.qmax = 5;
    o.nmax = 2;
    o.decomp_instances = 20;
    return o;
}

nlohmann::json without_times(const std::string& s) {
    auto o = nlohmann::json::parse(s);
    for (auto& x : o["suites"]) x.erase("wall_ms");
    return o;
}

}  // namespace

TEST(Suites, EachPassesOnASmallGrid) {
    for (const auto& name : suite_names()) {
        const SuiteReport r = run_suite(name, small());
        EXPECT_TRUE(r.ok()) << reports_text({r});
        EXPECT_GT(r.cases, 0u) << name;
    }
}

TEST(Suites, DeterministicGivenSeed) {
    const auto a = run_suites({"decomp", "hecke"}, small());
    const auto b = run_suites({"decomp", "hecke"}, small());
    EXPECT_EQ(without_times(reports_json(a, small())), without_times(reports_json(b, small())));
}

TEST(Suites, AllExpands) {
    const auto r = run_suites({"gauss", "all"}, small());
    EXPECT_EQ(r.size(), suite_names().size() + 1);
}

TEST(Suites, OptionValidation) {
    VerifyOptions o = small();
    o.qmax = 9;
    EXPECT_THROW(run_suite("gauss", o), Error);
    o.qmax = 29;
    EXPECT_THROW(run_suite("gauss", o), Error);
    o = small();
    o.nmax = 5;
    EXPECT_THROW(run_suite("gauss", o), Error);
    EXPECT_THROW(run_suite("nosuch", small()), Error);
}

TEST(Suites, FailuresAreRecorded) {
    SuiteReport r;
    EXPECT_TRUE(r.check(true, "k", "w"));
    EXPECT_FALSE(r.check(false, "q=3", "x = y", "1", "2"));
    EXPECT_EQ(r.cases, 2u);
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures[0].lhs, "1");
    const auto o = nlohmann::json::parse(reports_json({r}, small()));
    EXPECT_FALSE(o["pass"].get<bool>());
    EXPECT_EQ(o["failures"], 1);
}

TEST(Suites, ClassifySummary) {
    VerifyOptions o = small();
    const SuiteReport r = run_suite("classify", o);
    ASSERT_FALSE(r.summary.empty());
    EXPECT_EQ(r.summary.front().first, "orbits q=3 N=1");
    EXPECT_EQ(r.summary.front().second, "4");
}

TEST(Suites, BudgetPropagates) {
    VerifyOptions o = small();
    o.term_budget = 10;
    try {
        run_suite("hecke", o);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Budget);
    }
}
