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

#include "cusplab/lattices.hpp"
#include "cusplab/sympgroups.hpp"

using namespace cusplab;

namespace {

// random matrix whose entries sit exactly on the bounds of B (or above)
MatLS random_in(const ResidueField& k, const ValMatrix& B, std::mt19937_64& rng) {
    MatLS m(k, B.rows(), B.cols());
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) {
            if (B(i, j) >= kNoEntry) continue;
            const Fq c = k.from_int(static_cast<long>(rng() % k.q()));
            m(i, j) = LSeries::monomial(k, c, B(i, j) + static_cast<long>(rng() % 2));
        }
    return m;
}

// M maps Lambda(s) into Lambda(s + r) for all s, checked on basis vectors
bool maps_into(const LatticeSeq& L, const MatLS& m, long r) {
    for (long s = 0; s < L.period(); ++s) {
        const IntVec a = L.at(s), b = L.at(s + r);
        for (std::size_t j = 0; j < L.dim(); ++j)
            for (std::size_t i = 0; i < L.dim(); ++i) {
                const LSeries& x = m(i, j);
                if (x.is_zero()) continue;
                if (x.val() + a[j] < b[i]) return false;
            }
    }
    return true;
}

}  // namespace

TEST(LatticeSeq, PeriodicAndDecreasing) {
    for (std::size_t N = 1; N <= 3; ++N)
        for (const LatticeSeq& L : {standard_chain_2N(N), lambda_2(N), m0_pair(N), m1_pair(N), lambda_X(N)})
            for (long k = -3 * L.period(); k < 3 * L.period(); ++k) {
                const IntVec a = L.at(k), b = L.at(k + 1), c = L.at(k + L.period());
                for (std::size_t i = 0; i < L.dim(); ++i) {
                    EXPECT_LE(a[i], b[i]);
                    EXPECT_EQ(c[i], a[i] + 1);
                }
            }
}

TEST(LatticeSeq, JumpsAreWhereTheLatticeChanges) {
    const LatticeSeq L = standard_chain_2N(2);
    std::vector<long> brute;
    for (long k = -10; k < 10; ++k)
        if (L.at(k) != L.at(k + 1)) brute.push_back(k);
    EXPECT_EQ(L.jumps(-10, 10), brute);
    EXPECT_EQ(L.at(0), (IntVec{0, 0, 1, 1}));
}

TEST(Duality, SharpIsAnInvolution) {
    for (std::size_t N = 1; N <= 3; ++N) {
        const FormDescriptor h = form_h(2 * N);
        EXPECT_TRUE(h.alternating());
        EXPECT_TRUE(form_bold_h(N).alternating());
        const LatticeSeq L = standard_chain_2N(N);
        for (long k = 0; k < L.period(); ++k) EXPECT_EQ(sharp(sharp(L.at(k), h), h), L.at(k));
        EXPECT_EQ(dual(dual(L, h), h), L);
    }
}

TEST(Duality, TranslationShiftsTheInvariant) {
    const LatticeSeq L = standard_chain_2N(2);
    const FormDescriptor h = form_h(4);
    ASSERT_EQ(duality_invariant(L, h), 1L);
    EXPECT_EQ(duality_invariant(translate(L, 3), h), 7L);
    EXPECT_EQ(duality_invariant(dilate(L, 3), h), 1L);
    EXPECT_EQ(duality_invariant(translate(L, 1), h), 3L);
}

TEST(Filtration, ContainmentMatchesLatticeAction) {
    std::mt19937_64 rng(21);
    const ResidueField& k = ResidueField::prime(3);
    for (std::size_t N = 1; N <= 2; ++N)
        for (const LatticeSeq& L : {standard_chain_2N(N), lambda_X(N)})
            for (long r = -2; r <= 4; ++r) {
                const ValMatrix B = order_filtration(L, r);
                for (int it = 0; it < 20; ++it) {
                    MatLS m = random_in(k, B, rng);
                    EXPECT_TRUE(maps_into(L, m, r));
                    EXPECT_TRUE(B.contains(m));
                    // one entry just below its bound leaves A_r
                    const std::size_t i = rng() % L.dim(), j = rng() % L.dim();
                    m(i, j) = LSeries::monomial(k, k.one(), B(i, j) - 1);
                    EXPECT_FALSE(maps_into(L, m, r));
                    EXPECT_FALSE(B.contains(m));
                }
            }
}

TEST(Filtration, Multiplicative) {
    std::mt19937_64 rng(22);
    const ResidueField& k = ResidueField::prime(5);
    const LatticeSeq L = lambda_X(1);
    for (long r = 0; r <= 3; ++r)
        for (long s = 0; s <= 3; ++s) {
            const MatLS a = random_in(k, order_filtration(L, r), rng), b = random_in(k, order_filtration(L, s), rng);
            EXPECT_TRUE(order_filtration(L, r + s).contains(a * b));
        }
}

TEST(Filtration, BetaValuationAndEPart) {
    const ResidueField& k = ResidueField::prime(3);
    for (std::size_t N = 1; N <= 3; ++N) {
        const LatticeSeq L = standard_chain_2N(N);
        const MatLS b = beta_matrix(k, N);
        EXPECT_EQ(val_wrt(L, b), -2);
        EXPECT_EQ(val_wrt(L, b * b), -4);
        EXPECT_EQ(val_wrt(L, MatLS::identity(k, 2 * N)), 0);
        EXPECT_EQ(e_part_exponent(order_filtration(L, 0), N), 0L);
        EXPECT_EQ(e_part_exponent(order_filtration(L, 2), N), 1L);
        EXPECT_EQ(e_part_exponent(order_filtration(L, 4), N), 2L);
    }
}

TEST(Bounds, ConjugationByMonomial) {
    const ResidueField& k = ResidueField::prime(5);
    std::mt19937_64 rng(23);
    const WeylPair w = weyl_gl1(k, 1);
    const MonomialData t = monomial_data(w.s1);
    const LatticeSeq L = embed_pair(lambda_2(1), standard_chain_2N(1));
    const ValMatrix B = order_filtration(L, 1);
    const ValMatrix C = conjugate_bounds(B, t);
    const MatLS tinv = w.s1.inverse();
    for (int it = 0; it < 20; ++it) EXPECT_TRUE(C.contains(w.s1 * random_in(k, B, rng) * tinv));
}
