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

#include "cusplab/hecke.hpp"

#include <sstream>

#include "cusplab/error.hpp"
#include "cusplab/lattices.hpp"
#include "cusplab/matrix.hpp"
#include "cusplab/parallel.hpp"
#include "cusplab/sympgroups.hpp"

namespace cusplab {

namespace {

CycNum quadratic_inner(const ResidueField& k, Fq a, bool negate) {
    std::vector<std::int64_t> h(k.p(), 0);
    for (Fq u : k.units()) {
        const Sign s = k.delta(k.neg(u));
        Fq c = k.inv(u);
        if (negate) c = k.neg(c);
        for (Fq x : k.elements()) h[psi_exponent(k, k.mul(c, k.mul(x, x)), a)] += s;
    }
    return CycNum::from_histogram(k.p(), h);
}

mpz_class q_power(const ResidueField& k, std::size_t e) {
    mpz_class r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= k.q();
    return r;
}

}  // namespace

CycNum b1_gl1(const ResidueField& k, Fq a) { return quadratic_inner(k, a, false); }
CycNum b0_gl1(const ResidueField& k, Fq a) { return quadratic_inner(k, a, true); }

CycNum b0_gl2n(const ResidueField& k, Sign chi_m1) {
    long total = 0;
    const Fq two = k.from_int(2);
    for (Fq a : k.units())
        for (Fq u : k.units())
            if (k.is_zero(k.add(k.mul(two, a), k.mul(u, u)))) total += k.delta(a) * chi_m1;
    return CycNum::rational(k.p(), total);
}

std::uint64_t b1_gl2n_terms(const ResidueField& k, std::size_t N) {
    const mpz_class t = q_power(k, 2 * N) * (k.q() - 1);
    if (t > mpz_class("18446744073709551615")) return UINT64_MAX;
    return std::stoull(t.get_str());
}

Fq b1_quadratic_form(const ResidueField& k, const std::vector<Fq>& d) {
    require(!d.empty() && d.size() % 2 == 0, "quadratic form needs 2N variables");
    const std::size_t N = d.size() / 2, n = d.size();
    // 1-based d_i is d[i - 1]
    auto D = [&](std::size_t i) { return d[i - 1]; };
    Fq cross = k.zero(), anti = k.zero();
    for (std::size_t i = 1; i < N; ++i) cross = k.add(cross, k.mul(D(i), D(n - i)));
    for (std::size_t i = 1; i <= N; ++i) anti = k.add(anti, k.mul(D(i), D(n + 1 - i)));
    Fq s = k.add(k.mul(D(n), D(n)), k.mul(D(N), D(N)));
    const Fq two = k.from_int(2);
    s = k.add(s, k.mul(two, cross));
    return k.sub(s, k.mul(two, anti));
}

CycNum b1_gl2n_full(const ResidueField& k, std::size_t N, DeltaKind kind, Fq a, std::uint64_t budget,
                    unsigned workers) {
    require(N >= 1, "N must be positive");
    const std::uint64_t terms = b1_gl2n_terms(k, N);
    if (terms > budget)
        fail(ErrorKind::Budget, "b1 sum has " + std::to_string(terms) + " terms, budget is " + std::to_string(budget));
    if (workers == 0) workers = worker_count();
    const std::vector<Fq> zs = k.units();
    const std::size_t n = 2 * N;
    std::vector<std::vector<std::int64_t>> hist(workers, std::vector<std::int64_t>(k.p(), 0));
    parallel_chunks(zs.size(), workers, [&](std::size_t b, std::size_t e, unsigned w) {
        std::vector<std::int64_t>& h = hist[w];
        std::vector<Fq> d(n);
        for (std::size_t zi = b; zi < e; ++zi) {
            const Fq zinv = k.inv(zs[zi]);
            const Sign s = kind == DeltaKind::Quadratic ? k.delta(zs[zi]) : 1;
            std::fill(d.begin(), d.end(), k.zero());
            while (true) {
                h[psi_exponent(k, k.mul(zinv, b1_quadratic_form(k, d)), a)] += s;
                std::size_t i = 0;
                while (i < n && d[i].v + 1 == static_cast<std::uint32_t>(k.q())) d[i++].v = 0;
                if (i == n) break;
                ++d[i].v;
            }
        }
    });
    std::vector<std::int64_t> total(k.p(), 0);
    for (const auto& h : hist)
        for (int j = 0; j < k.p(); ++j) total[j] += h[j];
    return CycNum::from_histogram(k.p(), total);
}

CycNum b1_gl2n_reduced(const ResidueField& k, DeltaKind kind, Fq a) {
    std::vector<std::int64_t> h(k.p(), 0);
    for (Fq z : k.units()) {
        const Sign s = kind == DeltaKind::Quadratic ? k.delta(z) : 1;
        const Fq zinv = k.inv(z);
        for (Fq d : k.elements()) h[psi_exponent(k, k.mul(zinv, k.mul(d, d)), a)] += s;
    }
    return CycNum::from_histogram(k.p(), h);
}

mpz_class b1_reduction_factor(const ResidueField& k, std::size_t N) { return q_power(k, N); }

CycNum b1_gl1_closed(const ResidueField& k, Fq a) {
    return gauss_sum(k, a) * mpq_class((k.q() - 1) * k.delta(k.from_int(-1)));
}

CycNum b0_gl1_closed(const ResidueField& k, Fq a) { return gauss_sum(k, a) * mpq_class(k.q() - 1); }

CycNum b0_gl2n_closed(const ResidueField& k, Sign chi_m1) {
    return CycNum::rational(k.p(), (k.q() - 1) * chi_m1 * k.delta(k.from_int(-2)));
}

CycNum b1_gl2n_closed(const ResidueField& k, std::size_t N, DeltaKind kind, Fq a) {
    if (kind == DeltaKind::Trivial) return CycNum(k.p());
    return gauss_sum(k, a) * mpq_class(q_power(k, N) * (k.q() - 1));
}

QuadRelation QuadRelation::normalized(const ResidueField& k, long r) {
    require(r >= 0, "exponent must be nonnegative");
    const mpz_class qr = q_power(k, static_cast<std::size_t>(r));
    QuadRelation rel;
    rel.b = CycNum::rational(k.p(), mpq_class(qr - 1));
    rel.c = mpq_class(qr);
    return rel;
}

std::optional<long> QuadRelation::root_exponent(long q, long rmax) const {
    if (!c_positive || c <= 0 || !b.is_rational()) return std::nullopt;
    const mpq_class bq = b.as_rational();
    if (bq < 0) return std::nullopt;
    mpz_class qr = 1;
    for (long r = 0; r <= rmax; ++r) {
        const mpq_class lhs = bq * bq * qr;
        const mpq_class rhs = c * (qr - 1) * (qr - 1);
        if (lhs == rhs) return r;
        qr *= q;
    }
    return std::nullopt;
}

std::string QuadRelation::render() const {
    std::ostringstream os;
    os << "T^2 = (" << b.render() << ")*T + " << (c_positive ? "" : "?") << c.get_str();
    return os.str();
}

RayClass normalize_against(const CycNum& sum) {
    if (sum.is_zero()) fail(ErrorKind::Domain, "coefficient sum vanishes; no normalisation");
    return RayClass(sum).inverse();
}

bool c_positive(const RayClass& t, Sign char_at_w_inv_sq) {
    return is_positive_real(t.rep() * t.rep() * mpq_class(char_at_w_inv_sq));
}

GeneratorPair gl1_generator_norms(const ResidueField& k, Fq a) {
    GeneratorPair g;
    g.T1_val = normalize_against(b1_gl1(k, a));
    g.T0_val = normalize_against(b0_gl1(k, a));
    // t_i^2 = diag(-1, I, -1), on which the type character is delta(-1)
    const Sign dm1 = k.delta(k.from_int(-1));
    g.c0_positive = c_positive(g.T0_val, dm1);
    g.c1_positive = c_positive(g.T1_val, dm1);
    return g;
}

GeneratorPair gl2n_generator_norms(const ResidueField& k, std::size_t N, Sign chi_m1, Fq a, DeltaKind kind) {
    const CycNum s1 = b1_gl2n_full(k, N, kind, a);
    if (s1.is_zero()) fail(ErrorKind::Domain, "b1 vanishes: no reducibility at 1");
    GeneratorPair g;
    g.T1_val = normalize_against(s1);
    g.T0_val = normalize_against(b0_gl2n(k, chi_m1));
    // w0^2 = 1; w1^2 = diag(-1, I, -1) with delta(-1) from the W factor
    g.c0_positive = c_positive(g.T0_val, 1);
    g.c1_positive = c_positive(g.T1_val, k.delta(k.from_int(-1)));
    return g;
}

std::vector<mpq_class> four_values(long r0, long r1, long q) {
    require(r0 >= 0 && r1 >= 0, "exponents must be nonnegative");
    auto qp = [q](long e) {
        mpz_class r = 1;
        for (long i = 0; i < e; ++i) r *= q;
        return mpq_class(r);
    };
    return {mpq_class(1), -qp(r0), -qp(r1), qp(r0 + r1)};
}

std::pair<mpq_class, mpq_class> reducibility_exponents(long r0, long r1, long v) {
    require(r0 >= 0 && r1 >= 0 && v >= 1, "need r0, r1 >= 0 and v >= 1");
    const long d = r0 > r1 ? r0 - r1 : r1 - r0;
    mpq_class sa(r0 + r1, 2 * v), sb(d, 2 * v);
    sa.canonicalize();
    sb.canonicalize();
    return {sa, sb};
}

SelfDualChoice select_selfdual(const GeneratorPair& g) {
    SelfDualChoice s;
    s.lambda_a = g.T0_val * g.T1_val;
    s.lambda_b = -s.lambda_a;
    s.degenerate = g.r0 * g.r1 == 0;
    return s;
}

RayClass twist_value(const RayClass& zeta, const CycNum& chi_at_pi) {
    if (chi_at_pi.is_zero()) fail(ErrorKind::Domain, "twist by zero");
    return zeta * RayClass(chi_at_pi).inverse();
}

MethodState MethodState::twisted(const std::string& label, const CycNum& chi_at_pi) const {
    MethodState m;
    m.psi_norm = twist_value(psi_norm, chi_at_pi);
    for (const auto& [key, z] : zeta) m.zeta.emplace(key, twist_value(z, chi_at_pi));
    m.zeta.insert_or_assign(label, m.psi_norm);
    return m;
}

namespace {

MatLS diag_of(const std::vector<LSeries>& d) {
    require(!d.empty() && d.size() % 2 == 0, "diagonal needs 2N entries");
    return MatLS::diag(d);
}

LSeries trace(const MatLS& m) {
    LSeries t(m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

}  // namespace

TraceSides trace_aDD(const std::vector<LSeries>& d) {
    const MatLS D = diag_of(d);
    const std::size_t n = d.size(), N = n / 2;
    const ResidueField& k = D.field();
    LSeries s(k);
    for (std::size_t i = 0; i < N; ++i) s += d[i] * d[n - 1 - i];
    return TraceSides{s * LSeries::integer(k, 2), trace(adjoint_sp(D, form_h(n)) * D)};
}

TraceSides trace_conj(const std::vector<LSeries>& d) {
    const MatLS D = diag_of(d);
    const std::size_t n = d.size(), N = n / 2;
    const ResidueField& k = D.field();
    LSeries cross(k);
    for (std::size_t i = 1; i < N; ++i) cross += d[i - 1] * d[n - i - 1];
    const LSeries closed = d[n - 1] * d[n - 1] + d[N - 1] * d[N - 1] + cross * LSeries::integer(k, 2);
    const MatLS b = beta_matrix(k, N);
    const MatLS m = b * D * b.inverse() * adjoint_sp(D, form_h(n));
    return TraceSides{closed, trace(m)};
}

}  // namespace cusplab
