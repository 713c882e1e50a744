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

#include "cusplab/sympgroups.hpp"

#include "cusplab/error.hpp"

namespace cusplab {

namespace {

LSeries signed_monomial(const ResidueField& k, int sign, long e) {
    return LSeries::monomial(k, k.from_int(sign), e);
}

}  // namespace

MatLS gram_matrix(const ResidueField& k, const FormDescriptor& h) {
    MatLS G(k, h.dim(), h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) G(i, h.partner[i]) = signed_monomial(k, h.sign[i], h.gval[i]);
    return G;
}

MatLS adjoint_gl(const MatLS& m) { return m.anti_transpose(); }

// (G^-1 M^T G)_ij = s_{p(i)}^-1 s_{p(j)} M_{p(j), p(i)}, s_k = sign_k t^gval_k
MatLS adjoint_sp(const MatLS& m, const FormDescriptor& h) {
    require(m.square() && m.rows() == h.dim(), "adjoint: dimension mismatch");
    const ResidueField& k = m.field();
    MatLS a(k, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const std::size_t pi = h.partner[i];
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::size_t pj = h.partner[j];
            const LSeries& x = m(pj, pi);
            if (x.is_exact_zero()) continue;
            const int s = h.sign[pi] * h.sign[pj];
            LSeries y = x.shifted(h.gval[pj] - h.gval[pi]);
            a(i, j) = s > 0 ? y : -y;
        }
    }
    return a;
}

FormCheck preserves_form(const MatLS& m, const FormDescriptor& h) {
    require(m.square() && m.rows() == h.dim(), "form check: dimension mismatch");
    const MatLS G = gram_matrix(m.field(), h);
    const MatLS d = m.transpose() * G * m - G;
    return FormCheck{d.is_zero(), d.min_prec()};
}

bool is_in_group(const MatLS& m, const FormDescriptor* h, long level, const LatticeSeq& L) {
    if (h) {
        const FormCheck fc = preserves_form(m, *h);
        if (!fc.ok) return false;
    }
    const MatLS d = m - MatLS::identity(m.field(), m.rows());
    if (level == 0) {
        // the parahoric: M and M^-1 both stabilise the sequence
        return order_filtration(L, 0).contains(m) && order_filtration(L, 0).contains(m.inverse());
    }
    return order_filtration(L, level).contains(d);
}

MatLS beta_matrix(const ResidueField& k, std::size_t N) {
    require(N >= 1, "N must be positive");
    const std::size_t n = 2 * N;
    MatLS b(k, n, n);
    b(0, n - 1) = LSeries::monomial(k, k.one(), -1);
    for (std::size_t i = 1; i < n; ++i) b(i, i - 1) = LSeries::integer(k, i <= N ? -1 : 1);
    return b;
}

MatLS beta_X(const ResidueField& k, std::size_t N) {
    const MatLS b = beta_matrix(k, N);
    const MatLS z = MatLS::zero(k, 2 * N, 2 * N);
    const MatLS blocks[3][3] = {{b, z, z}, {z, b, z}, {z, z, b}};
    return MatLS::blocks3(blocks);
}

Fq psi_beta_argument(const MatLS& x) {
    require(x.square() && x.rows() % 2 == 0, "psi_beta needs an even square matrix");
    const std::size_t n = x.rows(), N = n / 2;
    const ResidueField& k = x.field();
    const MatLS d = x - MatLS::identity(k, n);
    if (!order_filtration(standard_chain_2N(N), 1).contains(d))
        fail(ErrorKind::Domain, "psi_beta: element is not in I(1)");
    const MatLS b = beta_matrix(k, N);
    LSeries tr(k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!b(i, j).is_exact_zero()) tr += b(i, j) * d(j, i);
    return tr.residue_at(0);
}

CycNum psi_beta(const MatLS& x, Fq a) { return psi(x.field(), psi_beta_argument(x), a); }

WeylPair weyl_gl1(const ResidueField& k, std::size_t N) {
    require(N >= 1, "N must be positive");
    const std::size_t n = 2 * N + 2;
    WeylPair w{MatLS::zero(k, n, n), MatLS::zero(k, n, n)};
    for (std::size_t i = 1; i + 1 < n; ++i) {
        w.s0(i, i) = LSeries::integer(k, 1);
        w.s1(i, i) = LSeries::integer(k, 1);
    }
    w.s0(0, n - 1) = LSeries::integer(k, 1);
    w.s0(n - 1, 0) = LSeries::integer(k, -1);
    w.s1(0, n - 1) = LSeries::monomial(k, k.from_int(-1), -1);
    w.s1(n - 1, 0) = LSeries::monomial(k, k.one(), 1);
    return w;
}

WeylPair weyl_gl2n(const ResidueField& k, std::size_t N) {
    const std::size_t n = 2 * N;
    const MatLS I = MatLS::identity(k, n), z = MatLS::zero(k, n, n);
    const MatLS b = beta_matrix(k, N);
    const MatLS binv = b.inverse();
    const MatLS w0[3][3] = {{z, z, I}, {z, I, z}, {I, z, z}};
    const MatLS w1[3][3] = {{z, z, b}, {z, I, z}, {-binv, z, z}};
    return WeylPair{MatLS::blocks3(w0), MatLS::blocks3(w1)};
}

MatLS lower_unipotent(const MatLS& D, const MatLS& Z, const MatLS& H) {
    const ResidueField& k = D.field();
    const std::size_t a = D.cols(), b = D.rows(), c = Z.rows();
    const MatLS blocks[3][3] = {
        {MatLS::identity(k, a), MatLS::zero(k, a, b), MatLS::zero(k, a, c)},
        {D, MatLS::identity(k, b), MatLS::zero(k, b, c)},
        {Z, H, MatLS::identity(k, c)}};
    return MatLS::blocks3(blocks);
}

MatLS upper_unipotent(const MatLS& H, const MatLS& Z, const MatLS& D) {
    const ResidueField& k = H.field();
    const std::size_t a = H.rows(), b = H.cols(), c = Z.cols();
    const MatLS blocks[3][3] = {
        {MatLS::identity(k, a), H, Z},
        {MatLS::zero(k, b, a), MatLS::identity(k, b), D},
        {MatLS::zero(k, c, a), MatLS::zero(k, c, b), MatLS::identity(k, c)}};
    return MatLS::blocks3(blocks);
}

MatLS levi(const MatLS& m, const MatLS& g, long relprec) {
    const ResidueField& k = m.field();
    const FormDescriptor h = form_h(m.rows());
    const MatLS am_inv = adjoint_sp(m, h).inverse(relprec);
    const std::size_t a = m.rows(), b = g.rows();
    const MatLS blocks[3][3] = {
        {m, MatLS::zero(k, a, b), MatLS::zero(k, a, a)},
        {MatLS::zero(k, b, a), g, MatLS::zero(k, b, a)},
        {MatLS::zero(k, a, a), MatLS::zero(k, a, b), am_inv}};
    return MatLS::blocks3(blocks);
}

MatLS symplectic_defect(const MatLS& D, const MatLS& Z) {
    const FormDescriptor h = form_h(D.rows());
    return Z + adjoint_sp(Z, h) + adjoint_sp(D, h) * D;
}

namespace {

// the blocks shared by both factorisations
IwahoriFactors common_blocks(const MatLS& D, const MatLS& Z, long relprec) {
    require(D.square() && Z.square() && D.rows() == Z.rows() && D.rows() % 2 == 0, "solver: bad block sizes");
    if (!symplectic_defect(D, Z).is_zero()) fail(ErrorKind::Domain, "Z + aZ + aD D != 0");
    const ResidueField& k = D.field();
    const FormDescriptor h = form_h(D.rows());
    const MatLS Zi = Z.inverse(relprec);
    const MatLS aD = adjoint_sp(D, h);
    IwahoriFactors f;
    f.E2 = Zi;
    f.E1 = Zi;
    f.B2 = -(Zi * aD);
    f.F1 = D * Zi;
    f.g = MatLS::identity(k, D.rows()) + D * Zi * aD;
    // g is symplectic, so g^-1 = ag
    const MatLS ginv = adjoint_sp(f.g, h);
    f.B1 = -(f.B2 * ginv);
    f.F2 = -(ginv * f.F1);
    return f;
}

}  // namespace

IwahoriFactors solve_inf(const MatLS& D, const MatLS& Z, long relprec) {
    IwahoriFactors f = common_blocks(D, Z, relprec);
    f.m = Z;
    return f;
}

// am^-1 = beta^-1 Z
IwahoriFactors solve_sup(const MatLS& D, const MatLS& Z, long relprec) {
    IwahoriFactors f = common_blocks(D, Z, relprec);
    const ResidueField& k = D.field();
    const FormDescriptor h = form_h(D.rows());
    const MatLS binv = beta_matrix(k, D.rows() / 2).inverse();
    f.m = adjoint_sp(binv * Z, h).inverse(relprec);
    return f;
}

MatLS reconstruct_inf(const IwahoriFactors& f, long relprec) {
    const WeylPair w = weyl_gl2n(f.m.field(), f.m.rows() / 2);
    return upper_unipotent(f.B1, f.E1, f.F1) * w.s0 * levi(f.m, f.g, relprec) *
           upper_unipotent(f.B2, f.E2, f.F2);
}

MatLS reconstruct_sup(const IwahoriFactors& f, long relprec) {
    const WeylPair w = weyl_gl2n(f.m.field(), f.m.rows() / 2);
    return lower_unipotent(f.F1, f.E1, f.B1) * w.s1 * levi(f.m, f.g, relprec) *
           lower_unipotent(f.F2, f.E2, f.B2);
}

LSeries random_integral(const ResidueField& k, std::mt19937_64& rng, long min_val, int terms) {
    std::vector<Fq> c(terms);
    for (auto& x : c) x.v = static_cast<std::uint32_t>(rng() % static_cast<std::uint64_t>(k.q()));
    return LSeries::from_coeffs(k, min_val, std::move(c));
}

RandomPair random_constraint_pair(const ResidueField& k, std::size_t N, std::mt19937_64& rng) {
    const std::size_t n = 2 * N;
    const FormDescriptor h = form_h(n);
    MatLS D(k, n, n), R(k, n, n);
    const bool unit_det = rng() % 2 == 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            D(i, j) = random_integral(k, rng, unit_det ? 1 : 0, 3);
            R(i, j) = random_integral(k, rng, 0, 3);
        }
    if (unit_det) {
        // t * (random) + diagonal units has unit determinant
        for (std::size_t i = 0; i < n; ++i) {
            Fq u{static_cast<std::uint32_t>(1 + rng() % static_cast<std::uint64_t>(k.q() - 1))};
            D(i, i) += LSeries::constant(k, u);
        }
    }
    const LSeries half = LSeries::constant(k, k.inv(k.from_int(2)));
    const MatLS Z = (adjoint_sp(D, h) * D) * (-half) + (R - adjoint_sp(R, h)) * half;
    return RandomPair{D, Z};
}

namespace {

bool is_identity_block(const MatLS& m, std::size_t i0, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const LSeries d = m(i0 + i, i0 + j) - LSeries::integer(m.field(), i == j ? 1 : 0);
            if (!d.is_zero()) return false;
        }
    return true;
}

bool is_zero_block(const MatLS& m, std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) {
    return m.block(i0, j0, r, c).is_zero();
}

bool val_at_least(const LSeries& x, long v) { return x.is_zero() ? x.prec() >= v : x.val() >= v; }

}  // namespace

bool gamma_membership(GammaCase gc, const MatLS& x) {
    require(x.square() && x.rows() >= 4 && x.rows() % 2 == 0, "gamma_membership: bad shape");
    const std::size_t n = x.rows(), m = n - 2, N = m / 2;
    if (!is_identity_block(x, 0, 1) || !is_identity_block(x, 1, m) || !is_identity_block(x, n - 1, 1)) return false;
    if (gc == GammaCase::Gamma) {
        if (!is_zero_block(x, 1, 0, n - 1, 1) || !is_zero_block(x, n - 1, 1, 1, m)) return false;
        const LSeries& z = x(0, n - 1);
        if (z.is_zero() || z.val() != -1) return false;
        for (std::size_t j = 1; j <= m; ++j)
            if (!val_at_least(x(0, j), 0)) return false;
    } else {
        if (!is_zero_block(x, 0, 1, 1, n - 1) || !is_zero_block(x, 1, n - 1, m, 1)) return false;
        const LSeries& u = x(n - 1, 0);
        if (!u.is_unit()) return false;
        for (std::size_t j = 1; j <= m; ++j)
            if (!val_at_least(x(n - 1, j), j <= N ? 1 : 0)) return false;
    }
    return preserves_form(x, form_h(n)).ok;
}

bool gl1_relations(const MatLS& B, const MatLS& C) {
    require(B.rows() == 1 && C.cols() == 1 && B.cols() == C.rows() && B.cols() % 2 == 0, "gl1_relations: bad shape");
    const std::size_t n = B.cols(), N = n / 2;
    for (std::size_t i = 1; i <= n; ++i) {
        const LSeries& b = B(0, n - i);  // x_{2N-i+1}
        const LSeries expect = i <= N ? b : -b;
        if (!(C(i - 1, 0) - expect).is_zero()) return false;
    }
    return (B * C).is_zero();
}

}  // namespace cusplab
