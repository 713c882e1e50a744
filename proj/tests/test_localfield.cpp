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

#include <random>

#include <gtest/gtest.h>

#include "cusplab/error.hpp"
#include "cusplab/localfield.hpp"

using namespace cusplab;

namespace {

std::vector<int> random_poly(std::mt19937_64& rng, int p, int len) {
    std::vector<int> c(len);
    for (auto& x : c) x = static_cast<int>(rng() % p);
    return c;
}

LSeries series(const ResidueField& k, long v, const std::vector<int>& c, long prec = kExact) {
    std::vector<Fq> f;
    for (int x : c) f.push_back(k.from_int(x));
    return LSeries::from_coeffs(k, v, f, prec);
}

}  // namespace

TEST(LSeries, ProductMatchesConvolution) {
    std::mt19937_64 rng(11);
    for (int p : {3, 5, 7}) {
        const ResidueField& k = ResidueField::prime(p);
        for (int it = 0; it < 50; ++it) {
            const auto a = random_poly(rng, p, 5), b = random_poly(rng, p, 4);
            std::vector<int> c(8, 0);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 4; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
            EXPECT_TRUE((series(k, -2, a) * series(k, 1, b)).equals(series(k, -1, c)));
        }
    }
}

TEST(LSeries, InverseToRequestedPrecision) {
    std::mt19937_64 rng(12);
    const ResidueField& k = ResidueField::prime(5);
    for (int it = 0; it < 50; ++it) {
        auto c = random_poly(rng, 5, 4);
        c[0] = 1 + static_cast<int>(rng() % 4);
        const LSeries x = series(k, 3, c);
        const LSeries y = x.inv(10);
        EXPECT_EQ(y.val(), -3);
        const LSeries one = x * y;
        EXPECT_TRUE(one.equals(LSeries::integer(k, 1)));
        EXPECT_GE(one.prec(), 10);
    }
}

TEST(LSeries, PrecisionTracking) {
    const ResidueField& k = ResidueField::prime(3);
    const LSeries a = series(k, 0, {1, 2}, 5);
    EXPECT_EQ(a.shifted(-2).prec(), 3);
    EXPECT_EQ((a * LSeries::monomial(k, k.one(), 2)).prec(), 7);
    EXPECT_EQ((a + series(k, 0, {1}, 3)).prec(), 3);
    EXPECT_THROW(a.residue_at(5), Error);
    EXPECT_EQ(a.residue_at(1), k.from_int(2));
    const LSeries z = LSeries::zero(k, 4);
    EXPECT_TRUE(z.is_zero());
    EXPECT_FALSE(z.is_exact_zero());
    EXPECT_THROW(z.val(), Error);
    try {
        z.inv();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Precision);
    }
    try {
        LSeries(k).inv();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Domain);
    }
}

TEST(LSeries, Characteristic) {
    const ResidueField& k = ResidueField::prime(7);
    EXPECT_TRUE(LSeries::integer(k, 7).is_exact_zero());
    EXPECT_TRUE((LSeries::integer(k, 3) * LSeries::integer(k, 5)).equals(LSeries::integer(k, 1)));
}
