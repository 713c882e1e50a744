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

#include <map>
#include <random>

#include <gtest/gtest.h>

#include "cusplab/error.hpp"
#include "cusplab/hecke.hpp"
#include "cusplab/lattices.hpp"
#include "cusplab/sympgroups.hpp"

using namespace cusplab;

namespace {

// sum_u delta(-u) sum_x psi_a(s x^2 / u), term by term
CycNum naive_gl1(const ResidueField& k, Fq a, int s) {
    CycNum acc(k.p());
    for (Fq u : k.units())
        for (Fq x : k.elements()) {
            Fq arg = k.mul(k.mul(x, x), k.inv(u));
            if (s < 0) arg = k.neg(arg);
            acc += psi(k, arg, a) * mpq_class(k.delta(k.neg(u)));
        }
    return acc;
}

// the quadratic form through matrices: tr(beta D beta^-1 aD) - tr(aD D)
Fq q_by_matrices(const ResidueField& k, std::size_t N, const std::vector<Fq>& d) {
    std::vector<LSeries> e;
    for (Fq x : d) e.push_back(LSeries::constant(k, x));
    const MatLS D = MatLS::diag(e), aD = adjoint_sp(D, form_h(2 * N));
    const MatLS b = beta_matrix(k, N);
    const MatLS m = b * D * b.inverse() * aD - aD * D;
    LSeries tr(k);
    for (std::size_t i = 0; i < 2 * N; ++i) tr += m(i, i);
    return tr.is_zero() ? k.zero() : tr.residue_at(0);
}

CycNum naive_b1_gl2n(const ResidueField& k, std::size_t N, DeltaKind kind, Fq a) {
    CycNum acc(k.p());
    std::vector<Fq> d(2 * N, k.zero());
    while (true) {
        const Fq Q = q_by_matrices(k, N, d);
        for (Fq z : k.units()) {
            const int dz = kind == DeltaKind::Quadratic ? k.delta(z) : 1;
            acc += psi(k, k.mul(Q, k.inv(z)), a) * mpq_class(dz);
        }
        std::size_t i = 0;
        while (i < d.size() && d[i].v + 1 == static_cast<std::uint32_t>(k.q())) d[i++] = k.zero();
        if (i == d.size()) break;
        d[i].v += 1;
    }
    return acc;
}

}  // namespace

TEST(Gl1Sums, MatchNaiveSumsAndClosedForms) {
    for (int q : {3, 5, 7, 11}) {
        const ResidueField& k = ResidueField::prime(q);
        for (Fq a : k.units()) {
            EXPECT_EQ(b1_gl1(k, a), naive_gl1(k, a, 1));
            EXPECT_EQ(b0_gl1(k, a), naive_gl1(k, a, -1));
            EXPECT_EQ(b1_gl1(k, a), b1_gl1_closed(k, a));
            EXPECT_EQ(b0_gl1(k, a), b0_gl1_closed(k, a));
        }
    }
}

TEST(Gl1Sums, SmallValues) {
    const ResidueField& k3 = ResidueField::prime(3);
    const CycNum s = CycNum::zeta_pow(3, 1) - CycNum::zeta_pow(3, 2);
    EXPECT_EQ(b1_gl1(k3, k3.one()), s * mpq_class(-2));
    EXPECT_EQ(b0_gl1(k3, k3.one()), s * mpq_class(2));
    const ResidueField& k5 = ResidueField::prime(5);
    EXPECT_EQ(b1_gl1(k5, k5.one()), gauss_sum(k5) * mpq_class(4));
}

TEST(Gl2nSums, B0MatchesDirectCount) {
    for (int q : {3, 5, 7, 11})
        for (Sign chi : {1, -1}) {
            const ResidueField& k = ResidueField::prime(q);
            long s = 0;
            for (Fq a : k.units())
                for (Fq u : k.units())
                    if (k.is_zero(k.add(k.add(a, a), k.mul(u, u)))) s += k.delta(a) * chi;
            EXPECT_EQ(b0_gl2n(k, chi), CycNum::rational(q, s));
            EXPECT_EQ(b0_gl2n(k, chi), b0_gl2n_closed(k, chi));
        }
    // q = 5: -2 = 3 is a non-square
    EXPECT_EQ(RayClass(b0_gl2n(ResidueField::prime(5), 1)).render(), "-1");
    EXPECT_EQ(RayClass(b0_gl2n(ResidueField::prime(7), -1)).render(), "1");
}

TEST(Gl2nSums, QuadraticFormMatchesMatrices) {
    const ResidueField& k = ResidueField::prime(5);
    for (std::size_t N = 1; N <= 3; ++N)
        for (int s = 0; s < 200; ++s) {
            std::vector<Fq> d(2 * N);
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = k.from_int((s * 7 + i * 3 + s * i) % 5);
            EXPECT_EQ(b1_quadratic_form(k, d), q_by_matrices(k, N, d));
        }
}

TEST(Gl2nSums, B1MatchesNaiveSum) {
    for (auto [q, N] : std::vector<std::pair<int, std::size_t>>{{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}})
        for (DeltaKind kind : {DeltaKind::Quadratic, DeltaKind::Trivial}) {
            const ResidueField& k = ResidueField::prime(q);
            const CycNum full = b1_gl2n_full(k, N, kind, k.one());
            EXPECT_EQ(full, naive_b1_gl2n(k, N, kind, k.one())) << q << " " << N;
            EXPECT_EQ(full, b1_gl2n_closed(k, N, kind, k.one()));
        }
}

TEST(Gl2nSums, ReductionFactorIsQToTheN) {
    for (int q : {3, 5})
        for (std::size_t N = 1; N <= 3; ++N) {
            const ResidueField& k = ResidueField::prime(q);
            const CycNum full = b1_gl2n_full(k, N, DeltaKind::Quadratic, k.one());
            const CycNum red = b1_gl2n_reduced(k, DeltaKind::Quadratic, k.one());
            mpz_class qn = 1, q2 = 1;
            for (std::size_t i = 0; i < N; ++i) qn *= q;
            for (std::size_t i = 0; i + 1 < 2 * N; ++i) q2 *= q;
            EXPECT_EQ(b1_reduction_factor(k, N), qn);
            EXPECT_EQ(full, red * mpq_class(qn));
            // q^(2N-1) agrees only when N = 1
            EXPECT_EQ(full == red * mpq_class(q2), N == 1);
        }
    const ResidueField& k3 = ResidueField::prime(3);
    const CycNum s = CycNum::zeta_pow(3, 1) - CycNum::zeta_pow(3, 2);
    EXPECT_EQ(b1_gl2n_full(k3, 1, DeltaKind::Quadratic, k3.one()), s * mpq_class(6));
    EXPECT_EQ(RayClass(b1_gl2n_full(k3, 1, DeltaKind::Quadratic, k3.one())).render(), "i");
}

TEST(Gl2nSums, WorkerCountDoesNotChangeTheResult) {
    const ResidueField& k = ResidueField::prime(5);
    const CycNum one = b1_gl2n_full(k, 2, DeltaKind::Quadratic, k.one(), kDefaultTermBudget, 1);
    for (unsigned w : {2u, 3u, 7u}) EXPECT_EQ(b1_gl2n_full(k, 2, DeltaKind::Quadratic, k.one(), kDefaultTermBudget, w), one);
}

TEST(Gl2nSums, BudgetGuard) {
    const ResidueField& k = ResidueField::prime(7);
    EXPECT_EQ(b1_gl2n_terms(k, 3), 705894u);
    try {
        b1_gl2n_full(k, 3, DeltaKind::Quadratic, k.one(), 1000);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Budget);
    }
}

// Residue-level model of the b0 sum for GL(2N): Z = a(1 + z), D = u(1 + d)
// with z, d running over A_1 / A_3, kept when Z + aZ + aD D lies in A_3.
// Each term is delta(a) chi(-1) psi_2beta(1 + z) psi_beta(-g).
TEST(GammaModel, ReproducesB0UpToFibre) {
    for (int q : {3, 5}) {
        const ResidueField& k = ResidueField::prime(q);
        const std::size_t N = 1, n = 2;
        const FormDescriptor h = form_h(n);
        const LatticeSeq L = standard_chain_2N(N);
        const ValMatrix A1 = order_filtration(L, 1), A3 = order_filtration(L, 3);
        struct Slot {
            std::size_t i, j;
            long e;
        };
        std::vector<Slot> slots;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (long e = A1(i, j); e < A3(i, j); ++e) slots.push_back({i, j, e});
        ASSERT_FALSE(slots.empty());
        auto build = [&](std::size_t code) {
            MatLS m(k, n, n);
            for (const Slot& s : slots) {
                m(s.i, s.j) += LSeries::monomial(k, Fq{static_cast<std::uint32_t>(code % q)}, s.e);
                code /= q;
            }
            return m;
        };
        std::size_t span = 1;
        for (std::size_t i = 0; i < slots.size(); ++i) span *= q;
        const MatLS I = MatLS::identity(k, n);
        for (Sign chi : {1, -1}) {
            std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> fibre;
            CycNum total(q);
            for (Fq a : k.units())
                for (Fq u : k.units())
                    for (std::size_t cz = 0; cz < span; ++cz)
                        for (std::size_t cd = 0; cd < span; ++cd) {
                            const MatLS z = build(cz), d = build(cd);
                            const MatLS Z = (I + z) * LSeries::constant(k, a), D = (I + d) * LSeries::constant(k, u);
                            const MatLS aD = adjoint_sp(D, h);
                            if (!A3.contains(Z + adjoint_sp(Z, h) + aD * D)) continue;
                            ++fibre[{a.v, u.v}];
                            const MatLS g = -(D * Z.inverse(12) * adjoint_sp(Z, h) * D.inverse(12));
                            const Fq e2 = k.add(psi_beta_argument(I + z), psi_beta_argument(I + z));
                            const Fq e1 = psi_beta_argument(-g);
                            total += psi(k, k.add(e1, e2), k.one()) * mpq_class(k.delta(a) * chi);
                        }
            ASSERT_FALSE(fibre.empty());
            const std::size_t f = fibre.begin()->second;
            for (const auto& [au, c] : fibre) {
                const Fq a{au.first}, u{au.second};
                EXPECT_TRUE(k.is_zero(k.add(k.add(a, a), k.mul(u, u))));
                EXPECT_EQ(c, f);
            }
            EXPECT_EQ(fibre.size(), static_cast<std::size_t>(q - 1));
            EXPECT_EQ(total, b0_gl2n(k, chi) * mpq_class(static_cast<long>(f)));
        }
    }
}

TEST(Normalisation, GeneratorValues) {
    const ResidueField& k3 = ResidueField::prime(3);
    const GeneratorPair g3 = gl1_generator_norms(k3, k3.one());
    EXPECT_EQ(g3.T1_val.render(), "i");
    EXPECT_EQ(g3.T0_val.render(), "-i");
    EXPECT_EQ((g3.T0_val * g3.T1_val).render(), "1");
    const ResidueField& k5 = ResidueField::prime(5);
    const GeneratorPair g5 = gl1_generator_norms(k5, k5.one());
    EXPECT_EQ(g5.T1_val.render(), "1");
    EXPECT_EQ(g5.T0_val.render(), "1");
    for (Sign chi : {1, -1}) {
        const GeneratorPair h = gl2n_generator_norms(k3, 2, chi, k3.one());
        EXPECT_EQ(h.T1_val.render(), "-i");
        EXPECT_EQ(h.T0_val.render(), chi > 0 ? "1" : "-1");
        EXPECT_TRUE(h.c0_positive && h.c1_positive);
    }
    EXPECT_EQ(gl2n_generator_norms(k5, 1, 1, k5.one()).T1_val.render(), "1");
    EXPECT_THROW(gl2n_generator_norms(k3, 1, 1, k3.one(), DeltaKind::Trivial), Error);
    for (int q : {3, 5, 7, 11, 13}) {
        const ResidueField& k = ResidueField::prime(q);
        const GeneratorPair g = gl1_generator_norms(k, k.one());
        EXPECT_EQ((g.T0_val * g.T1_val).render(), "1") << q;
        EXPECT_TRUE(g.c0_positive && g.c1_positive);
    }
}

TEST(Normalisation, CPositivityFromSquares) {
    const int q = 7;
    const RayClass i = RayClass::of_fourth_root(q, FourthRoot(1));
    EXPECT_FALSE(c_positive(i, 1));
    EXPECT_TRUE(c_positive(i, -1));
    EXPECT_TRUE(c_positive(RayClass(CycNum::rational(q, -3)), 1));
    EXPECT_THROW(normalize_against(CycNum(q)), Error);
}

TEST(Method, FourValuesAndExponents) {
    EXPECT_EQ(four_values(1, 1, 5), (std::vector<mpq_class>{1, -5, -5, 25}));
    const auto [a, b] = reducibility_exponents(1, 1, 1);
    EXPECT_EQ(a, 1);
    EXPECT_EQ(b, 0);
    const auto [c, d] = reducibility_exponents(1, 0, 1);
    EXPECT_EQ(c, mpq_class(1, 2));
    EXPECT_EQ(d, mpq_class(1, 2));
    const auto [e, f] = reducibility_exponents(3, 1, 2);
    EXPECT_EQ(e, 1);
    EXPECT_EQ(f, mpq_class(1, 2));
}

TEST(Method, QuadRelation) {
    for (int q : {3, 5, 7})
        for (long r : {0L, 1L, 2L, 3L}) {
            const QuadRelation rel = QuadRelation::normalized(ResidueField::prime(q), r);
            mpz_class qr = 1;
            for (long i = 0; i < r; ++i) qr *= q;
            EXPECT_EQ(rel.b, CycNum::rational(q, mpq_class(qr - 1)));
            EXPECT_EQ(rel.c, mpq_class(qr));
            EXPECT_EQ(rel.root_exponent(q), r);
        }
}

TEST(Method, SelfDualSelection) {
    const ResidueField& k = ResidueField::prime(7);
    GeneratorPair g = gl1_generator_norms(k, k.one());
    const SelfDualChoice s = select_selfdual(g);
    EXPECT_EQ(s.lambda_a.render(), "1");
    EXPECT_EQ(s.lambda_b, -s.lambda_a);
    EXPECT_FALSE(s.degenerate);
    g.r0 = 0;
    EXPECT_TRUE(select_selfdual(g).degenerate);
}

TEST(Method, Twists) {
    const int q = 5;
    const RayClass x = RayClass::of_fourth_root(q, FourthRoot(1));
    EXPECT_EQ(twist_value(x, CycNum::rational(q, 1)), x);
    const CycNum m = CycNum::rational(q, -1);
    EXPECT_EQ(twist_value(twist_value(x, m), m), x);
    EXPECT_THROW(twist_value(x, CycNum(q)), Error);
    MethodState st;
    st.psi_norm = x;
    const MethodState t = st.twisted("a", CycNum::zeta_pow(q, 2));
    EXPECT_EQ(t.psi_norm, twist_value(x, CycNum::zeta_pow(q, 2)));
    EXPECT_EQ(t.zeta.count("a"), 1u);
}

TEST(Traces, TwoWays) {
    const ResidueField& k = ResidueField::prime(7);
    std::mt19937_64 rng(41);
    for (std::size_t N = 1; N <= 3; ++N)
        for (int s = 0; s < 50; ++s) {
            std::vector<LSeries> d(2 * N);
            for (auto& x : d) x = random_integral(k, rng, 0, 3);
            const TraceSides a = trace_aDD(d), c = trace_conj(d);
            EXPECT_TRUE((a.closed - a.matrix).is_zero());
            EXPECT_TRUE((c.closed - c.matrix).is_zero());
        }
}
