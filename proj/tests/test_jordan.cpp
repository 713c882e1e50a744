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
#include "cusplab/jordan.hpp"

using namespace cusplab;

namespace {

// (-1)^((N+1)(q-1)/2), by parity count
Sign eps1_oracle(int q, std::size_t N) { return ((N + 1) * (q - 1) / 2) % 2 == 0 ? 1 : -1; }

}  // namespace

TEST(Jordan, KnownCases) {
    const JordanSet a = jordan_set(make_data(ResidueField::prime(3), 2, 1));
    EXPECT_EQ(render_sign(a.eps1_on_norms), "-1");
    EXPECT_EQ(a.tau_beta.render(), "-i");
    EXPECT_TRUE(a.all_ok());
    const JordanSet b = jordan_set(make_data(ResidueField::prime(5), 1, -1));
    EXPECT_EQ(render_sign(b.eps1_on_norms), "+1");
    EXPECT_TRUE(b.all_ok());
}

TEST(Jordan, BothDerivationsOnTheGrid) {
    for (int q : {3, 5, 7, 11, 13})
        for (std::size_t N = 1; N <= 3; ++N)
            for (Sign chi : {1, -1}) {
                const SimpleCuspidalData d = make_data(ResidueField::prime(q), N, chi);
                EXPECT_EQ(epsilon1_closed(d), eps1_oracle(q, N));
                EXPECT_EQ(epsilon1_from_hecke(d), eps1_oracle(q, N)) << q << " " << N;
                std::string route;
                EXPECT_EQ(tau_beta_from_hecke(d, &route), tau_beta_closed(d));
                EXPECT_TRUE(route == "full" || route == "reduced");
                const JordanSet j = jordan_set(d);
                EXPECT_TRUE(j.all_ok()) << q << " " << N << " " << chi;
                EXPECT_EQ(j.s_eps1, 1);
                EXPECT_EQ(j.s_sigma, 1);
                EXPECT_EQ(j.sigma_dim, 2 * N);
            }
}

TEST(Jordan, ReducedRouteAgreesWithFull) {
    const SimpleCuspidalData d = make_data(ResidueField::prime(5), 2, -1);
    std::string r1, r2;
    const FourthRoot full = tau_beta_from_hecke(d, &r1, 100000000);
    const FourthRoot red = tau_beta_from_hecke(d, &r2, 1);
    EXPECT_EQ(r1, "full");
    EXPECT_EQ(r2, "reduced");
    EXPECT_EQ(full, red);
}

TEST(Jordan, EpsilonProductCoversAllResidueClasses) {
    for (int q : {3, 5, 7, 13})
        for (Sign chi : {1, -1}) EXPECT_EQ(eps_factor_product(make_data(ResidueField::prime(q), 1, chi)), chi);
}

TEST(Jordan, DetBeta) {
    for (std::size_t N = 1; N <= 4; ++N) EXPECT_EQ(det_beta_inv_valuation(ResidueField::prime(3), N), 1);
}

TEST(Jordan, JsonShape) {
    const JordanSet j = jordan_set(make_data(ResidueField::prime(7), 2, -1));
    const auto o = nlohmann::json::parse(jordan_json(j));
    for (const char* key : {"N", "q", "chi_m1", "eps1_on_norms", "tau_beta", "reducibility_points", "eps_product"})
        EXPECT_TRUE(o.contains(key)) << key;
    EXPECT_EQ(o["N"], 2);
    EXPECT_EQ(o["q"], 7);
    EXPECT_EQ(o["chi_m1"], "-1");
    EXPECT_EQ(o["eps_product"], "-1");
    EXPECT_EQ(jordan_json(j), jordan_json(jordan_set(make_data(ResidueField::prime(7), 2, -1))));
    EXPECT_FALSE(jordan_text(j).empty());
}

TEST(Jordan, RejectsBadInput) {
    EXPECT_THROW(make_data(ResidueField::prime(3), 0, 1), Error);
    EXPECT_THROW(make_data(ResidueField::prime(3), 1, 2), Error);
}
