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
#include "cusplab/genchars.hpp"
#include "cusplab/sympgroups.hpp"

using namespace cusplab;

namespace {

MatLS random_matrix(const ResidueField& k, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    MatLS m(k, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_integral(k, rng, -1, 3);
    return m;
}

}  // namespace

TEST(Adjoint, DefinedByTheForm) {
    std::mt19937_64 rng(31);
    const ResidueField& k = ResidueField::prime(5);
    for (std::size_t N = 1; N <= 3; ++N)
        for (const FormDescriptor& h : {form_h(2 * N), form_bold_h(N)}) {
            const MatLS G = gram_matrix(k, h);
            EXPECT_TRUE((G.transpose() + G).is_zero());
            for (int it = 0; it < 5; ++it) {
                const MatLS a = random_matrix(k, h.dim(), h.dim(), rng), b = random_matrix(k, h.dim(), h.dim(), rng);
                // h(Mx, y) = h(x, aM y):  M^T G = G aM
                EXPECT_TRUE((a.transpose() * G - G * adjoint_sp(a, h)).is_zero());
                EXPECT_TRUE((adjoint_sp(adjoint_sp(a, h), h) - a).is_zero());
                EXPECT_TRUE((adjoint_sp(a * b, h) - adjoint_sp(b, h) * adjoint_sp(a, h)).is_zero());
            }
        }
}

TEST(Beta, BasicIdentities) {
    for (int q : {3, 5, 7})
        for (std::size_t N = 1; N <= 3; ++N) {
            const ResidueField& k = ResidueField::prime(q);
            const MatLS b = beta_matrix(k, N);
            const LSeries c = LSeries::monomial(k, k.from_int(N % 2 ? -1 : 1), -1);
            EXPECT_TRUE((b.pow(2 * N) - MatLS::scalar(k, 2 * N, c)).is_zero());
            EXPECT_TRUE((adjoint_sp(b, form_h(2 * N)) + b).is_zero());
            // val det beta^-1 = 1
            EXPECT_EQ(b.inverse().det().val(), 1);
        }
}

TEST(Beta, ConjugationShiftsTheDiagonal) {
    std::mt19937_64 rng(32);
    const ResidueField& k = ResidueField::prime(7);
    const std::size_t N = 2, n = 4;
    const MatLS b = beta_matrix(k, N), bi = b.inverse();
    for (int it = 0; it < 10; ++it) {
        std::vector<LSeries> d(n);
        for (auto& x : d) x = random_integral(k, rng, 0, 2);
        const MatLS c = b * MatLS::diag(d) * bi;
        for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE((c(i, i) - d[(i + n - 1) % n]).is_zero());
    }
}

TEST(Beta, NormalisesTheIwahoriRadical) {
    std::mt19937_64 rng(33);
    for (int q : {3, 5})
        for (std::size_t N = 1; N <= 3; ++N) {
            const ResidueField& k = ResidueField::prime(q);
            const std::size_t n = 2 * N;
            const LatticeSeq L = standard_chain_2N(N);
            const FormDescriptor h = form_h(n);
            const ValMatrix A1 = order_filtration(L, 1);
            const MatLS b = beta_matrix(k, N), bi = b.inverse();
            bool left_sp = false;
            for (int it = 0; it < 50; ++it) {
                MatLS Y(k, n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) Y(i, j) = random_integral(k, rng, A1(i, j), 6);
                const MatLS x = MatLS::identity(k, n) + Y;
                EXPECT_TRUE(is_in_group(b * x * bi, nullptr, 1, L));
                EXPECT_TRUE(is_in_group(bi * x * b, nullptr, 1, L));
                // symplectic x: the conjugate stays in I(1) only while beta^2 is scalar
                const MatLS half = MatLS::scalar(k, n, LSeries::integer(k, 2).inv());
                const MatLS s = cayley(half * (Y - adjoint_sp(Y, h)));
                ASSERT_TRUE(is_in_group(s, &h, 1, L));
                const bool in = is_in_group(b * s * bi, &h, 1, L);
                if (N == 1) {
                    EXPECT_TRUE(in);
                }
                if (!in) left_sp = true;
            }
            EXPECT_EQ(left_sp, N > 1) << "q=" << q << " N=" << N;
        }
}

TEST(Weyl, SymplecticAndStabilising) {
    const ResidueField& k = ResidueField::prime(3);
    for (std::size_t N = 1; N <= 3; ++N) {
        const WeylPair t = weyl_gl1(k, N), w = weyl_gl2n(k, N);
        EXPECT_TRUE(preserves_form(t.s0, form_h(2 * N + 2)).ok);
        EXPECT_TRUE(preserves_form(t.s1, form_h(2 * N + 2)).ok);
        EXPECT_TRUE(preserves_form(w.s0, form_bold_h(N)).ok);
        EXPECT_TRUE(preserves_form(w.s1, form_bold_h(N)).ok);
        EXPECT_TRUE(stabilizes(monomial_data(t.s0), embed_pair(m0_pair(N), standard_chain_2N(N))));
        EXPECT_TRUE(stabilizes(monomial_data(t.s1), embed_pair(m1_pair(N), standard_chain_2N(N))));
        // the squares: w0^2 = I, t_i^2 = diag(-1, I, -1)
        EXPECT_TRUE((w.s0 * w.s0 - MatLS::identity(k, 6 * N)).is_zero());
        MatLS m = MatLS::identity(k, 2 * N + 2);
        m(0, 0) = LSeries::integer(k, -1);
        m(2 * N + 1, 2 * N + 1) = LSeries::integer(k, -1);
        EXPECT_TRUE((t.s0 * t.s0 - m).is_zero());
        EXPECT_TRUE((t.s1 * t.s1 - m).is_zero());
    }
}

TEST(PsiBeta, DomainGuard) {
    const ResidueField& k = ResidueField::prime(3);
    MatLS x = MatLS::identity(k, 2);
    x(0, 0) = LSeries::integer(k, 2);
    EXPECT_THROW(psi_beta_argument(x), Error);
    EXPECT_EQ(psi_beta_argument(MatLS::identity(k, 2)), k.zero());
}

TEST(Decomposition, ReconstructsBothSolvers) {
    std::mt19937_64 rng(33);
    for (int q : {3, 5})
        for (std::size_t N = 1; N <= 2; ++N) {
            const ResidueField& k = ResidueField::prime(q);
            const FormDescriptor h = form_h(2 * N);
            for (int it = 0; it < 10; ++it) {
                const RandomPair pr = random_constraint_pair(k, N, rng);
                if (pr.Z.det(40).is_zero()) continue;
                ASSERT_TRUE(symplectic_defect(pr.D, pr.Z).is_zero());
                const MatLS aD = adjoint_sp(pr.D, h);
                const IwahoriFactors a = solve_inf(pr.D, pr.Z, 40), b = solve_sup(pr.D, pr.Z, 40);
                EXPECT_TRUE((reconstruct_inf(a, 40) - lower_unipotent(pr.D, pr.Z, -aD)).is_zero());
                EXPECT_TRUE((reconstruct_sup(b, 40) - upper_unipotent(-aD, pr.Z, pr.D)).is_zero());
                EXPECT_TRUE(preserves_form(a.g, h).ok);
                EXPECT_TRUE(preserves_form(b.g, h).ok);
            }
        }
}

TEST(Decomposition, RejectsNonSymplecticInput) {
    const ResidueField& k = ResidueField::prime(5);
    const MatLS I = MatLS::identity(k, 2);
    EXPECT_THROW(solve_inf(I, I, 10), Error);
}

TEST(Membership, GammaShapes) {
    const ResidueField& k = ResidueField::prime(5);
    const std::size_t N = 1, n = 2;
    MatLS B(k, 1, n), C(k, n, 1);
    B(0, 0) = LSeries::integer(k, 2);
    B(0, 1) = LSeries::integer(k, 3);
    C(0, 0) = B(0, 1);
    C(1, 0) = -B(0, 0);
    ASSERT_TRUE(gl1_relations(B, C));
    const MatLS x = upper_unipotent(B, MatLS::scalar(k, 1, LSeries::monomial(k, k.one(), -1)), C);
    EXPECT_TRUE(preserves_form(x, form_h(n + 2)).ok);
    EXPECT_TRUE(gamma_membership(GammaCase::Gamma, x));
    C(1, 0) = B(0, 0);
    EXPECT_FALSE(gl1_relations(B, C));
    EXPECT_FALSE(preserves_form(upper_unipotent(B, MatLS::scalar(k, 1, LSeries::integer(k, 1)), C), form_h(n + 2)).ok);
    (void)N;
}
