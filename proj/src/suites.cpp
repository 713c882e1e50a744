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

#include "cusplab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cusplab/error.hpp"
#include "cusplab/exactnum.hpp"
#include "cusplab/genchars.hpp"
#include "cusplab/hecke.hpp"
#include "cusplab/jordan.hpp"
#include "cusplab/lattices.hpp"
#include "cusplab/localfield.hpp"
#include "cusplab/matrix.hpp"
#include "cusplab/residue.hpp"
#include "cusplab/sympgroups.hpp"

namespace cusplab {

bool SuiteReport::check(bool pass, const std::string& key, const std::string& what, const std::string& lhs,
                        const std::string& rhs) {
    ++cases;
    if (!pass) failures.push_back(CaseFailure{key, what, lhs, rhs});
    return pass;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"gauss", "zolotarev", "lattice", "beta", "decomp",
                                                   "hecke", "classify", "jordan", "method"};
    return names;
}

bool is_suite_name(const std::string& s) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), s) != n.end();
}

std::vector<int> odd_primes_upto(long qmax) {
    std::vector<int> out;
    for (long p = 3; p <= qmax; p += 2)
        if (is_prime(p)) out.push_back(static_cast<int>(p));
    return out;
}

namespace {

std::string key_q(int q) { return "q=" + std::to_string(q); }
std::string key_qN(int q, std::size_t N) { return "q=" + std::to_string(q) + " N=" + std::to_string(N); }
std::string key_N(std::size_t N) { return "N=" + std::to_string(N); }

std::string join(const std::vector<long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::string opt_str(const std::optional<long>& x) { return x ? std::to_string(*x) : "none"; }

// ---------------------------------------------------------------- gauss

void suite_gauss(SuiteReport& r, const VerifyOptions& opt) {
    std::vector<int> qs = {3, 5, 7, 11, 13};
    for (int p : odd_primes_upto(opt.qmax))
        if (std::find(qs.begin(), qs.end(), p) == qs.end()) qs.push_back(p);
    for (int q : qs) {
        const ResidueField& k = ResidueField::prime(q);
        const Sign dm1 = k.delta(k.from_int(-1));
        const CycNum G = gauss_sum(k);
        const CycNum qq = CycNum::rational(q, q);
        r.check(G * G.conj() == qq, key_q(q), "G conj(G) = q", (G * G.conj()).render(), qq.render());
        r.check(G * G == qq * mpq_class(dm1), key_q(q), "G^2 = (-1)^((q-1)/2) q", (G * G).render(),
                (qq * mpq_class(dm1)).render());
        const FourthRoot x = xi(k);
        r.check(x.square() == FourthRoot::from_sign(dm1), key_q(q), "xi^2 = (-1)^((q-1)/2)", x.square().render(),
                FourthRoot::from_sign(dm1).render());
        r.check(RayClass(G) == RayClass::of_fourth_root(q, x), key_q(q), "G in the ray of xi", G.render(),
                x.render());
    }
}

// ---------------------------------------------------------------- zolotarev

void suite_zolotarev(SuiteReport& r, const VerifyOptions& opt) {
    std::vector<const ResidueField*> fields;
    for (int p : odd_primes_upto(std::max<long>(opt.qmax, 23))) fields.push_back(&ResidueField::prime(p));
    fields.push_back(&ResidueField::extension(3, {1, 0, 1}));  // F_9 = F_3[x]/(x^2 + 1)
    for (const ResidueField* k : fields) {
        bool all = true;
        std::string bad;
        for (Fq x : k->units())
            if (zolotarev(*k, x) != k->delta(x)) {
                all = false;
                bad = k->render(x);
            }
        r.check(all, key_q(k->q()), "signature of y -> xy equals delta(x)", bad, "");
    }
}

// ---------------------------------------------------------------- lattice

bool stabilizes_lattice(const MonomialData& g, const IntVec& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[g.perm[i]] + g.val[i] != a[i]) return false;
    return true;
}

std::vector<long> arithmetic(long lo, long hi, long start, long step) {
    std::vector<long> out;
    for (long t = lo; t < hi; ++t)
        if (((t - start) % step + step) % step == 0) out.push_back(t);
    return out;
}

// shapes of J_P cap U and J_P cap U^- in x_0, V, x_{2N+1}; identity and
// zero entries carry kNoEntry
struct IwahoriShapes {
    ValMatrix U, Um;
};

ValMatrix empty_shape(std::size_t n) { return ValMatrix(n, n, kNoEntry); }

IwahoriShapes iwahori_shapes(const LatticeSeq& L) {
    const std::size_t n = L.dim(), m = n - 2;
    const PairBlocks p1 = pair_blocks(L, 1), p2 = pair_blocks(L, 2);
    IwahoriShapes s{empty_shape(n), empty_shape(n)};
    s.U.set_block(0, 1, p1.R1);
    s.U(0, n - 1) = 0;
    s.U.set_block(1, n - 1, p1.C2);
    s.Um.set_block(1, 0, p2.C1);
    s.Um(n - 1, 0) = 1;
    s.Um.set_block(n - 1, 1, p2.R2);
    (void)m;
    return s;
}

void suite_lattice(SuiteReport& r, const VerifyOptions& opt) {
    const std::size_t nmax = static_cast<std::size_t>(opt.nmax);
    const ResidueField& k = ResidueField::prime(3);
    for (std::size_t N = 1; N <= nmax; ++N) {
        const std::string key = key_N(N);
        const long n = static_cast<long>(2 * N), e = 2 * n;
        const LatticeSeq L = standard_chain_2N(N);
        const FormDescriptor h = form_h(2 * N), h2 = form_h(2), hP = form_h(2 * N + 2);

        r.check(L.period() == e, key, "Lambda_2N period 4N", std::to_string(L.period()), std::to_string(e));
        const auto jl = L.jumps(-2 * e, 2 * e);
        const auto odd = arithmetic(-2 * e, 2 * e, 1, 2);
        r.check(jl == odd, key, "Lambda_2N jumps are the odd integers", join(jl), join(odd));

        const LatticeSeq l2 = lambda_2(N), M0 = m0_pair(N), M1 = m1_pair(N);
        const LatticeSeq lam = embed_pair(l2, L), m0 = embed_pair(M0, L), m1 = embed_pair(M1, L);
        const LatticeSeq X = lambda_X(N);
        const std::vector<std::pair<std::string, std::optional<long>>> duals = {
            {"Lambda_2N", duality_invariant(L, h)},  {"Lambda_2", duality_invariant(l2, h2)},
            {"m_0", duality_invariant(M0, h2)},      {"m_1", duality_invariant(M1, h2)},
            {"Lambda", duality_invariant(lam, hP)},  {"M_0", duality_invariant(m0, hP)},
            {"M_1", duality_invariant(m1, hP)},      {"Lambda_X", duality_invariant(X, form_bold_h(N))}};
        for (const auto& [name, d] : duals)
            r.check(d == 1L, key, "duality invariant of " + name + " is 1", opt_str(d), "1");

        const auto j2 = l2.jumps(-2 * e, 2 * e);
        const auto j2e = arithmetic(-2 * e, 2 * e, static_cast<long>(N), n);
        r.check(j2 == j2e, key, "Lambda_2 jumps are N + 2N Z", join(j2), join(j2e));
        bool flat = true;
        for (long t = -static_cast<long>(N) + 1; t <= static_cast<long>(N); ++t) flat = flat && l2.at(t) == IntVec{0, 1};
        r.check(flat, key, "Lambda_2 = (o, p) on [-N+1, N]");
        const auto jm0 = M0.jumps(-2 * e, 2 * e), jm0e = arithmetic(-2 * e, 2 * e, 0, e);
        r.check(jm0 == jm0e, key, "m_0 jumps are 4N Z", join(jm0), join(jm0e));
        const auto jm1 = M1.jumps(-2 * e, 2 * e), jm1e = arithmetic(-2 * e, 2 * e, n, e);
        r.check(jm1 == jm1e, key, "m_1 jumps are 2N + 4N Z", join(jm1), join(jm1e));

        r.check(X.period() == 6 * n, key, "Lambda_X period 12N", std::to_string(X.period()), std::to_string(6 * n));
        const std::size_t bn = 2 * N;
        const long P = X.period();
        const auto jw = X.jumps(0, P, 0, bn), jv = X.jumps(0, P, bn, 2 * bn), jws = X.jumps(0, P, 2 * bn, 3 * bn);
        r.check(jw == arithmetic(0, P, 5, 6), key, "W jumps at 5 mod 6", join(jw));
        r.check(jv == arithmetic(0, P, 3, 6), key, "V jumps at 3 mod 6", join(jv));
        r.check(jws == arithmetic(0, P, 1, 6), key, "W* jumps at 1 mod 6", join(jws));

        r.check(order_filtration(L, 1) == order_filtration(L, 2), key, "A_1(Lambda_2N) = A_2(Lambda_2N)");
        for (long t = 1; t <= 3; ++t)
            r.check(order_filtration(X, 2 * t - 1) == order_filtration(X, 2 * t), key,
                    "A_" + std::to_string(2 * t - 1) + "(Lambda_X) = A_" + std::to_string(2 * t) + "(Lambda_X)");

        // J^1_X = A_3(Lambda_X) + (A_1(Lambda_X) cap M_3(E))
        const ValMatrix A1 = order_filtration(X, 1), A3 = order_filtration(X, 3);
        const long s[3][3] = {{1, 1, 0}, {1, 1, 1}, {3, 1, 1}};
        const std::optional<long> epart[3][3] = {{std::nullopt, 0L, std::nullopt},
                                                 {std::nullopt, std::nullopt, 0L},
                                                 {1L, std::nullopt, std::nullopt}};
        for (int I = 0; I < 3; ++I)
            for (int J = 0; J < 3; ++J) {
                const std::string blk = "block (" + std::to_string(I) + "," + std::to_string(J) + ")";
                const ValMatrix b3 = A3.block(I * bn, J * bn, bn, bn), b1 = A1.block(I * bn, J * bn, bn, bn);
                r.check(b3 == order_filtration(L, s[I][J]), key,
                        blk + " of A_3(Lambda_X) = A_" + std::to_string(s[I][J]) + "(Lambda_2N)");
                const auto e1 = e_part_exponent(b1, N), e3 = e_part_exponent(b3, N);
                if (epart[I][J]) {
                    r.check(e1 == epart[I][J], key, blk + ": E cap A_1(Lambda_X) = p_E^" + opt_str(epart[I][J]),
                            opt_str(e1), opt_str(epart[I][J]));
                    r.check(e1 && e3 && *e1 < *e3, key, blk + ": E-part not absorbed by A_3", opt_str(e1), opt_str(e3));
                } else {
                    r.check(e1 && e3 && *e1 >= *e3, key, blk + ": E-part absorbed by A_3", opt_str(e1), opt_str(e3));
                }
            }
        r.check(e_part_exponent(order_filtration(L, 0), N) == 0L, key, "E cap A_0(Lambda_2N) = o_E");
        r.check(e_part_exponent(order_filtration(L, 1), N) == 1L, key, "E cap A_1(Lambda_2N) = p_E");

        // R / C chains
        const PairBlocks p1 = pair_blocks(lam, 1), p2 = pair_blocks(lam, 2);
        r.check(p1.R1.shifted(1).subset_of(p2.R2) && p2.R2.subset_of(p1.R1) && p1.R1.subset_of(p2.R2.shifted(-1)), key,
                "p R1(1) < R2(2) < R1(1) < p^-1 R2(2)");
        r.check(p1.C2.shifted(1).subset_of(p2.C1) && p2.C1.subset_of(p1.C2) && p1.C2.subset_of(p2.C1.shifted(-1)), key,
                "p C2(1) < C1(2) < C2(1) < p^-1 C1(2)");
        if (N % 2 == 1)
            r.check(order_filtration(lam, 1).block(0, 1, 1, bn) == order_filtration(lam, 2).block(0, 1, 1, bn) &&
                        order_filtration(lam, 1).block(bn + 1, 1, 1, bn) == order_filtration(lam, 2).block(bn + 1, 1, 1, bn),
                    key, "N odd: a12_1 = a12_2");

        // conjugates of J_P cap U^{+-}
        const WeylPair t = weyl_gl1(k, N);
        const MonomialData t0 = monomial_data(t.s0), t1 = monomial_data(t.s1);
        const IwahoriShapes sh = iwahori_shapes(lam);
        const std::size_t dimP = 2 * N + 2;
        ValMatrix t0Um = empty_shape(dimP), t0U = empty_shape(dimP), t1Um = empty_shape(dimP), t1U = empty_shape(dimP);
        t0Um.set_block(0, 1, p2.R2);
        t0Um(0, dimP - 1) = 1;
        t0Um.set_block(1, dimP - 1, p2.C1);
        t0U.set_block(1, 0, p1.C2);
        t0U(dimP - 1, 0) = 0;
        t0U.set_block(dimP - 1, 1, p1.R1);
        t1Um.set_block(0, 1, p2.R2.shifted(-1));
        t1Um(0, dimP - 1) = -1;
        t1Um.set_block(1, dimP - 1, p2.C1.shifted(-1));
        t1U.set_block(1, 0, p1.C2.shifted(1));
        t1U(dimP - 1, 0) = 2;
        t1U.set_block(dimP - 1, 1, p1.R1.shifted(1));
        const ValMatrix c0m = conjugate_bounds(sh.Um, t0), c0 = conjugate_bounds(sh.U, t0);
        const ValMatrix c1m = conjugate_bounds(sh.Um, t1), c1 = conjugate_bounds(sh.U, t1);
        r.check(c0m == t0Um, key, "t0 (J cap U^-) t0^-1 as displayed", c0m.render(), t0Um.render());
        r.check(c0 == t0U, key, "t0 (J cap U) t0^-1 as displayed", c0.render(), t0U.render());
        r.check(c1m == t1Um, key, "t1 (J cap U^-) t1^-1 as displayed", c1m.render(), t1Um.render());
        r.check(c1 == t1U, key, "t1 (J cap U) t1^-1 as displayed", c1.render(), t1U.render());
        r.check(c0m.subset_of(sh.U) && sh.U.subset_of(c1m), key, "t0 (J cap U^-) t0^-1 < J cap U < t1 (J cap U^-) t1^-1");
        r.check(c1.subset_of(sh.Um) && sh.Um.subset_of(c0), key, "t1 (J cap U) t1^-1 < J cap U^- < t0 (J cap U) t0^-1");

        r.check(stabilizes(t0, m0), key, "t0 in P(M_0)");
        r.check(stabilizes(t1, m1), key, "t1 in P(M_1)");
        const MatLS pi = MatLS::diag([&] {
            std::vector<LSeries> d(dimP, LSeries::integer(k, 1));
            d.front() = LSeries::monomial(k, k.one(), 1);
            d.back() = LSeries::monomial(k, k.one(), -1);
            return d;
        }());
        r.check((t.s0 * t.s1 - pi).is_zero(), key, "t0 t1 = diag(p, I, p^-1)");
        r.check(preserves_form(t.s0, hP).ok && preserves_form(t.s1, hP).ok, key, "t0, t1 symplectic");

        const WeylPair w = weyl_gl2n(k, N);
        const MonomialData w0 = monomial_data(w.s0), w1 = monomial_data(w.s1);
        r.check(stabilizes_lattice(w0, X.at(0)), key, "w0 stabilises Lambda_X(0)");
        r.check(stabilizes_lattice(w1, X.at(-2)) && stabilizes_lattice(w1, X.at(3)), key,
                "w1 stabilises Lambda_X(-2) and Lambda_X(3)");
        const MatLS b = beta_matrix(k, N), binv = b.inverse();
        const MatLS I = MatLS::identity(k, bn), z = MatLS::zero(k, bn, bn);
        const MatLS expect[3][3] = {{-binv, z, z}, {z, I, z}, {z, z, b}};
        r.check((w.s0 * w.s1 - MatLS::blocks3(expect)).is_zero(), key, "w0 w1 = diag(-beta^-1, I, beta)");
        r.check(preserves_form(w.s0, form_bold_h(N)).ok && preserves_form(w.s1, form_bold_h(N)).ok, key,
                "w0, w1 symplectic");
    }
}

// ---------------------------------------------------------------- beta

void suite_beta(SuiteReport& r, const VerifyOptions& opt) {
    for (int q : odd_primes_upto(std::min<long>(opt.qmax, 7)))
        for (std::size_t N = 1; N <= static_cast<std::size_t>(opt.nmax); ++N) {
            const ResidueField& k = ResidueField::prime(q);
            const std::string key = key_qN(q, N);
            const MatLS b = beta_matrix(k, N);
            const std::size_t n = 2 * N;
            const LSeries c = LSeries::monomial(k, k.from_int(N % 2 == 0 ? 1 : -1), -1);
            r.check((b.pow(static_cast<long>(n)) - MatLS::scalar(k, n, c)).is_zero(), key,
                    "beta^2N = (-1)^N p^-1 I");
            r.check((adjoint_sp(b, form_h(n)) + b).is_zero(), key, "a(beta) = -beta");
            const long v = val_wrt(standard_chain_2N(N), b);
            r.check(v == -2, key, "val_Lambda(beta) = -2", std::to_string(v), "-2");
            const long vx = val_wrt(lambda_X(N), beta_X(k, N));
            r.check(vx == -6, key, "val_Lambda_X(beta) = -6", std::to_string(vx), "-6");

            const AffGenChar lb = from_beta(k, N);
            for (std::size_t j = 0; j <= N; ++j)
                for (Fq u : k.units()) {
                    const MatLS x = coordinate_element(k, N, j, u);
                    std::vector<Fq> want(N + 1, k.zero());
                    want[j] = u;
                    const std::string kk = key + " j=" + std::to_string(j) + " u=" + k.render(u);
                    r.check(preserves_form(x, form_h(n)).ok && coordinates(x) == want, kk,
                            "coordinate element is symplectic with the right coordinates");
                    const Fq lhs = psi_beta_argument(x), rhs = character_argument(lb, x);
                    r.check(lhs == rhs, kk, "res tr(beta(x-1)) = sum alpha_j x_j", k.render(lhs), k.render(rhs));
                }
        }
}

// ---------------------------------------------------------------- decomp

void suite_decomp(SuiteReport& r, const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    const long rp = opt.relprec;
    // every difference must vanish to this absolute precision; the solver
    // precision is doubled until it does, up to 16 rp
    const long target = rp;
    for (int q : {3, 5}) {
        if (q > opt.qmax) continue;
        const ResidueField& k = ResidueField::prime(q);
        for (std::size_t N = 1; N <= std::min<std::size_t>(2, opt.nmax); ++N) {
            const std::string key = key_qN(q, N);
            const std::size_t n = 2 * N;
            const FormDescriptor h = form_h(n), hX = form_bold_h(N);
            std::uint64_t ok_inf = 0, ok_sup = 0, g_ok = 0, ginv_ok = 0, ginv_cases = 0;
            std::string bad_inf, bad_sup;
            for (int solver = 0; solver < 2; ++solver)
                for (std::uint64_t it = 0; it < opt.decomp_instances; ++it) {
                    RandomPair pr = random_constraint_pair(k, N, rng);
                    while (pr.Z.det(rp).is_zero()) pr = random_constraint_pair(k, N, rng);
                    const MatLS aD = adjoint_sp(pr.D, h);
                    const MatLS x = solver == 0 ? lower_unipotent(pr.D, pr.Z, -aD) : upper_unipotent(-aD, pr.Z, pr.D);
                    const bool x_sp = preserves_form(x, hX).ok;
                    const bool d_inv = !pr.D.det(rp).is_zero();
                    bool rec = false, g_sp = false, g_formula = false, decided = false;
                    MatLS diff;
                    for (long prec = rp; prec <= 16 * rp && !decided; prec *= 2) try {
                        const IwahoriFactors f = solver == 0 ? solve_inf(pr.D, pr.Z, prec) : solve_sup(pr.D, pr.Z, prec);
                        diff = (solver == 0 ? reconstruct_inf(f, prec) : reconstruct_sup(f, prec)) - x;
                        const FormCheck fc = preserves_form(f.g, h);
                        MatLS gdiff;
                        if (d_inv)
                            gdiff = f.g + pr.D * pr.Z.inverse(prec) * adjoint_sp(pr.Z, h) * pr.D.inverse(prec);
                        // a known nonzero coefficient settles the question
                        if (!diff.is_zero() || !fc.ok || (d_inv && !gdiff.is_zero())) {
                            rec = diff.is_zero();
                            g_sp = fc.ok;
                            g_formula = d_inv && gdiff.is_zero();
                            decided = true;
                        } else if (diff.min_prec() >= target && fc.precision >= target &&
                                   (!d_inv || gdiff.min_prec() >= target)) {
                            rec = g_sp = g_formula = true;
                            decided = true;
                        }
                    } catch (const Error& e) {
                        if (e.kind() != ErrorKind::Precision) throw;
                    }
                    if (rec && x_sp)
                        ++(solver == 0 ? ok_inf : ok_sup);
                    else if ((solver == 0 ? bad_inf : bad_sup).empty())
                        (solver == 0 ? bad_inf : bad_sup) = "#" + std::to_string(it) + "\n" + diff.render();
                    if (g_sp) ++g_ok;
                    if (d_inv) {
                        ++ginv_cases;
                        if (g_formula) ++ginv_ok;
                    }
                }
            const std::string total = std::to_string(opt.decomp_instances);
            r.check(ok_inf == opt.decomp_instances, key, "solve_inf reconstructs exactly", std::to_string(ok_inf) + "/" + total,
                    bad_inf);
            r.check(ok_sup == opt.decomp_instances, key, "solve_sup reconstructs exactly", std::to_string(ok_sup) + "/" + total,
                    bad_sup);
            r.check(g_ok == 2 * opt.decomp_instances, key, "g symplectic", std::to_string(g_ok));
            r.check(ginv_cases > 0 && ginv_ok == ginv_cases, key, "g = -D Z^-1 aZ D^-1 for invertible D",
                    std::to_string(ginv_ok) + "/" + std::to_string(ginv_cases));

            // membership characterisations, both sides exact
            std::uint64_t agree_u = 0, agree_l = 0, agree_g = 0, pos_u = 0, pos_g = 0;
            const int samples = 100;
            for (int s = 0; s < samples; ++s) {
                const RandomPair pr = random_constraint_pair(k, N, rng);
                MatLS H = -adjoint_sp(pr.D, h), Z = pr.Z;
                const int mode = static_cast<int>(rng() % 3);
                const std::size_t i = rng() % n, j = rng() % n;
                const LSeries c = LSeries::constant(k, Fq{static_cast<std::uint32_t>(1 + rng() % (q - 1))});
                if (mode == 1) H(i, j) += c;
                if (mode == 2) Z(i, j) += c;
                const bool predicted = (H + adjoint_sp(pr.D, h)).is_zero() && symplectic_defect(pr.D, Z).is_zero();
                if (predicted) ++pos_u;
                agree_u += preserves_form(upper_unipotent(H, Z, pr.D), hX).ok == predicted;
                agree_l += preserves_form(lower_unipotent(pr.D, Z, H), hX).ok == predicted;

                // GL(1) shape [[1, B, z], [0, I, C], [0, 0, 1]]
                MatLS B(k, 1, n), C(k, n, 1);
                for (std::size_t c2 = 0; c2 < n; ++c2) B(0, c2) = random_integral(k, rng, -1, 3);
                const int gmode = static_cast<int>(rng() % 3);
                for (std::size_t i2 = 1; i2 <= n; ++i2) {
                    const LSeries& bb = B(0, n - i2);
                    C(i2 - 1, 0) = i2 <= N ? bb : -bb;
                }
                if (gmode == 1) C(rng() % n, 0) += c;
                if (gmode == 2)
                    for (std::size_t i2 = 0; i2 < n; ++i2) C(i2, 0) = random_integral(k, rng, -1, 3);
                const MatLS one = MatLS::identity(k, 1);
                const MatLS zz = MatLS::scalar(k, 1, LSeries::monomial(k, k.one(), -1));
                const MatLS x = upper_unipotent(B, zz, C);
                const bool rel = gl1_relations(B, C);
                if (rel) ++pos_g;
                agree_g += preserves_form(x, form_h(n + 2)).ok == rel;
                (void)one;
            }
            r.check(agree_u == samples && pos_u > 0 && pos_u < samples, key,
                    "upper unipotent in Sp iff H = -aD and Z + aZ + aD D = 0",
                    std::to_string(agree_u) + " agree, " + std::to_string(pos_u) + " members");
            r.check(agree_l == samples, key, "lower unipotent in Sp iff H = -aD and Z + aZ + aD D = 0",
                    std::to_string(agree_l));
            r.check(agree_g == samples && pos_g > 0 && pos_g < samples, key, "GL(1) unipotent in Sp iff C = B^tau, BC = 0",
                    std::to_string(agree_g) + " agree, " + std::to_string(pos_g) + " members");
        }
    }
}

// ---------------------------------------------------------------- hecke

void suite_hecke(SuiteReport& r, const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int q : odd_primes_upto(opt.qmax)) {
        const ResidueField& k = ResidueField::prime(q);
        const Fq one = k.one();
        const std::string kq = key_q(q);
        const Sign dm1 = k.delta(k.from_int(-1)), dm2 = k.delta(k.from_int(-2));
        const FourthRoot x = xi(k);
        const CycNum G = gauss_sum(k);

        const CycNum b1 = b1_gl1(k, one), b0 = b0_gl1(k, one);
        r.check(b1 == b1_gl1_closed(k, one), kq, "b1(GL1) = (q-1) delta(-1) G", b1.render(), b1_gl1_closed(k, one).render());
        r.check(b0 == b0_gl1_closed(k, one), kq, "b0(GL1) = (q-1) G", b0.render(), b0_gl1_closed(k, one).render());
        r.check(b0 == b1 * mpq_class(dm1), kq, "b0(GL1) = delta(-1) b1(GL1)");
        r.check(RayClass(b1) == RayClass(G * mpq_class(dm1)), kq, "b1(GL1) ~ delta(-1) G");
        r.check(RayClass(b0) == RayClass(G), kq, "b0(GL1) ~ G");

        const GeneratorPair g1 = gl1_generator_norms(k, one);
        r.check(g1.T1_val == RayClass::of_fourth_root(q, x), kq, "T1(t1) = xi", g1.T1_val.render(), x.render());
        r.check(g1.T0_val == RayClass::of_fourth_root(q, FourthRoot::from_sign(dm1) * x), kq, "T0(t0) = delta(-1) xi",
                g1.T0_val.render());
        r.check(g1.T0_val * g1.T1_val == RayClass(CycNum::rational(q, 1)), kq, "T0(t0) T1(t1) ~ 1");
        r.check(g1.c0_positive && g1.c1_positive, kq, "c0, c1 > 0 (GL1)");

        for (Sign chi : {1, -1}) {
            const std::string kc = kq + " chi=" + render_sign(chi);
            const CycNum s0 = b0_gl2n(k, chi);
            r.check(s0 == b0_gl2n_closed(k, chi), kc, "b0(GL2N) = (q-1) chi(-1) delta(-2)", s0.render(),
                    b0_gl2n_closed(k, chi).render());
            r.check(RayClass(s0) == RayClass(CycNum::rational(q, chi * dm2)), kc, "b0(GL2N) ~ chi(-1) delta(-2)");
        }

        for (std::size_t N = 1; N <= static_cast<std::size_t>(opt.nmax); ++N) {
            const std::string key = key_qN(q, N);
            const CycNum full = b1_gl2n_full(k, N, DeltaKind::Quadratic, one, opt.term_budget, opt.threads);
            const CycNum closed = b1_gl2n_closed(k, N, DeltaKind::Quadratic, one);
            r.check(full == closed, key, "b1(GL2N) = q^N (q-1) G", full.render(), closed.render());
            const CycNum red = b1_gl2n_reduced(k, DeltaKind::Quadratic, one);
            r.check(full == red * mpq_class(b1_reduction_factor(k, N)), key, "full sum = q^N reduced sum");
            r.check(RayClass(full) == RayClass::of_fourth_root(q, x), key, "b1(GL2N) ~ xi");
            const CycNum triv = b1_gl2n_full(k, N, DeltaKind::Trivial, one, opt.term_budget, opt.threads);
            r.check(triv.is_zero(), key, "b1(GL2N) = 0 for trivial delta", triv.render(), "0");

            const GeneratorPair g2 = gl2n_generator_norms(k, N, 1, one);
            r.check(g2.T1_val == RayClass::of_fourth_root(q, x.inverse()), key, "T1(w1) = xi^-1", g2.T1_val.render());
            r.check(g2.T0_val == RayClass(CycNum::rational(q, dm2)), key, "T0(w0) = delta(-2) (chi(-1) = 1)");
            r.check(g2.c0_positive && g2.c1_positive, key, "c0, c1 > 0 (GL2N)");

            bool traces = true;
            std::string bad;
            for (int s = 0; s < 200; ++s) {
                std::vector<LSeries> d(2 * N);
                for (auto& di : d) di = random_integral(k, rng, 0, 3);
                const TraceSides a = trace_aDD(d), c = trace_conj(d);
                if (!(a.closed - a.matrix).is_zero() || !(c.closed - c.matrix).is_zero()) {
                    traces = false;
                    bad = a.closed.render() + " / " + a.matrix.render();
                }
                const MatLS b = beta_matrix(k, N);
                const MatLS conj = b * MatLS::diag(d) * b.inverse();
                for (std::size_t i = 0; i < 2 * N; ++i)
                    if (!(conj(i, i) - d[(i + 2 * N - 1) % (2 * N)]).is_zero()) traces = false;
            }
            r.check(traces, key, "trace identities and diagonal shift, 200 diagonal D", bad);
        }
    }
}

// ---------------------------------------------------------------- classify

void suite_classify(SuiteReport& r, const VerifyOptions& opt) {
    for (int q : odd_primes_upto(opt.qmax))
        for (std::size_t N = 1; N <= std::min<std::size_t>(opt.nmax, 2); ++N) {
            const ResidueField& k = ResidueField::prime(q);
            const std::string key = key_qN(q, N);
            const bool exhaustive = q == 3;
            const OrbitCensus c = orbit_census(k, N, exhaustive);
            const std::size_t want = 2 * static_cast<std::size_t>(q - 1);
            r.check(c.orbits == want, key, "orbit count 2(q-1)", std::to_string(c.orbits), std::to_string(want));
            r.summary.emplace_back("orbits " + key, std::to_string(c.orbits));
            r.check(2 * c.orbits == 2 * want, key, "cuspidal count 4(q-1)", std::to_string(2 * c.orbits),
                    std::to_string(2 * want));
            r.check(c.criteria_match, key, exhaustive ? "criteria <=> orbits, all pairs" : "criteria <=> orbits");
            r.check(c.canonical_match, key, "canonical representative is an orbit invariant");
            r.check(canonical_representatives(k, N).size() == want, key, "one canonical representative per orbit");

            const auto chars = all_characters(k, N);
            bool implied = true, twist_ok = true, axioms = true;
            for (const auto& a : chars) {
                const AffGenChar t = gsp_twist(a);
                if (!same_orbit(gsp_twist(t), a) || same_orbit(t, a)) twist_ok = false;
                const OrbitInvariants ia = orbit_invariants(a), it = orbit_invariants(t);
                if (ia.alpha_N_class == it.alpha_N_class) twist_ok = false;
                if (conj_by_torus(a, std::vector<Fq>(N, k.one())) != a) axioms = false;
            }
            if (exhaustive) {
                for (const auto& a : chars)
                    for (const auto& b : chars) {
                        const OrbitInvariants ia = orbit_invariants(a), ib = orbit_invariants(b);
                        if (ia.product == ib.product &&
                            (ia.alpha_N_class == ib.alpha_N_class) != (ia.alpha_2N_class == ib.alpha_2N_class))
                            implied = false;
                    }
                const auto us = k.units();
                for (const auto& a : chars)
                    for (Fq d1 : us)
                        for (Fq d2 : us) {
                            std::vector<Fq> d(N, d1), e(N, d2), de(N);
                            if (N == 2) d[1] = d2, e[1] = d1;
                            for (std::size_t i = 0; i < N; ++i) de[i] = k.mul(d[i], e[i]);
                            if (conj_by_torus(conj_by_torus(a, e), d) != conj_by_torus(a, de)) axioms = false;
                        }
                r.check(implied, key, "given (iii), (i) <=> (ii)");
                r.check(axioms, key, "torus action axioms");
            }
            r.check(twist_ok, key, "gsp_twist swaps the square-class sectors and squares into the orbit");
            const AffGenChar tb = gsp_twist(from_beta(k, N));
            const Fq eps = k.smallest_nonsquare();
            r.check(tb.alpha[N - 1] == k.neg(eps) && tb.alpha[N] == k.inv(eps), key,
                    "gsp_twist(psi_beta): alpha_N = -eps, alpha_2N = 1/eps");
        }
}

// ---------------------------------------------------------------- jordan

void suite_jordan(SuiteReport& r, const VerifyOptions& opt) {
    for (int q : odd_primes_upto(opt.qmax)) {
        const ResidueField& k = ResidueField::prime(q);
        for (std::size_t N = 1; N <= static_cast<std::size_t>(opt.nmax); ++N) {
            Sign eps_prev = 0;
            FourthRoot tau_prev;
            for (Sign chi : {1, -1}) {
                const std::string key = key_qN(q, N) + " chi=" + render_sign(chi);
                const JordanSet j = jordan_set(make_data(k, N, chi));
                r.check(j.eps1_on_norms == j.eps1_on_norms_hecke, key, "eps1(N beta): closed = hecke",
                        render_sign(j.eps1_on_norms), render_sign(j.eps1_on_norms_hecke));
                r.check(j.eps1_at_varpi == 1, key, "eps1(varpi) = 1");
                r.check(j.tau_beta == j.tau_beta_hecke, key, "tau(beta): closed = hecke", j.tau_beta.render(),
                        j.tau_beta_hecke.render());
                r.check(j.tau_consistent(), key, "tau(-beta^2) = 1, tau(-beta^2N) = ((-1)^((q-1)/2))^(N+1)",
                        j.tau_minus_beta_sq.render() + " " + j.tau_minus_beta_2N.render());
                r.check(j.eps_product_ok(), key, "eps(eps1) eps(sigma) = chi(-1)", j.eps_product.render(), render_sign(chi));
                r.check(j.langlands_ok(), key, "omega(N beta) = omega(-1)^(N-1), tau(2 beta)^2 = omega(-1)");
                r.check(j.s_eps1 == 1 && j.s_sigma == 1, key, "reducibility points 1, 1");
                if (chi == -1) {
                    r.check(j.eps1_on_norms == eps_prev, key, "eps1 independent of chi");
                    r.check(j.tau_beta == FourthRoot(2) * tau_prev, key, "tau(beta) flips with chi(-1)");
                }
                eps_prev = j.eps1_on_norms;
                tau_prev = j.tau_beta;
            }
        }
    }
    // all four (chi(-1), q mod 4) combinations, with a prime past the grid
    for (int q : {3, 5, 7, 13})
        for (Sign chi : {1, -1}) {
            const ResidueField& k = ResidueField::prime(q);
            const Sign e = eps_factor_product(make_data(k, 1, chi));
            r.check(e == chi, key_q(q) + " chi=" + render_sign(chi), "eps product = chi(-1)", render_sign(e),
                    render_sign(chi));
        }
}

// ---------------------------------------------------------------- method

void suite_method(SuiteReport& r, const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 7);
    for (int q : odd_primes_upto(opt.qmax)) {
        const ResidueField& k = ResidueField::prime(q);
        const std::string kq = key_q(q);
        const auto fv = four_values(1, 1, q);
        const std::vector<mpq_class> want = {1, -q, -q, mpq_class(q) * q};
        r.check(fv == want, kq, "four values {1, -q, -q, q^2}");
        const QuadRelation rel = QuadRelation::normalized(k, 1);
        r.check(rel.root_exponent(q) == 1L, kq, "(T+1)(T-q) has root quotient -q");

        for (std::size_t N = 1; N <= static_cast<std::size_t>(opt.nmax); ++N) {
            const std::string key = key_qN(q, N);
            const long v = det_beta_inv_valuation(k, N);
            const auto [sa, sb] = reducibility_exponents(1, 1, v);
            r.check(v == 1 && sa == 1 && sb == 0, key, "GL(2N): v = 1, (s_a, s_b) = (1, 0)",
                    std::to_string(v) + " " + sa.get_str() + " " + sb.get_str());
        }
        const auto [sa1, sb1] = reducibility_exponents(1, 1, 1);
        r.check(sa1 == 1 && sb1 == 0, kq, "GL(1): (s_a, s_b) = (1, 0)");

        const GeneratorPair g = gl1_generator_norms(k, k.one());
        const SelfDualChoice base = select_selfdual(g);
        bool invariant = true;
        for (int s = 0; s < 10; ++s) {
            mpq_class c0(static_cast<long>(1 + rng() % 97), static_cast<unsigned long>(1 + rng() % 89));
            mpq_class c1(static_cast<long>(1 + rng() % 97), static_cast<unsigned long>(1 + rng() % 89));
            c0.canonicalize();
            c1.canonicalize();
            GeneratorPair h = g;
            h.T0_val = RayClass(g.T0_val.rep() * c0);
            h.T1_val = RayClass(g.T1_val.rep() * c1);
            const SelfDualChoice sc = select_selfdual(h);
            invariant = invariant && sc.lambda_a == base.lambda_a && sc.lambda_b == base.lambda_b;
        }
        r.check(invariant, kq, "select_selfdual invariant under positive rescaling");
        r.check(!base.degenerate && base.lambda_a != base.lambda_b, kq, "r0 r1 > 0 separates the two points");

        MethodState m;
        m.psi_norm = base.lambda_a;
        const CycNum minus = CycNum::rational(q, -1);
        const MethodState twice = m.twisted("chi", minus).twisted("chi2", minus);
        r.check(twice.psi_norm == m.psi_norm, kq, "twist by -1 twice is the identity");
        const CycNum z = CycNum::zeta_pow(q, 1), z2 = CycNum::zeta_pow(q, 2);
        r.check(twist_value(twist_value(m.psi_norm, z), z) == twist_value(m.psi_norm, z2), kq,
                "twists compose multiplicatively");
    }
}

using SuiteFn = void (*)(SuiteReport&, const VerifyOptions&);

const std::map<std::string, SuiteFn>& suite_table() {
    static const std::map<std::string, SuiteFn> t = {
        {"gauss", suite_gauss},   {"zolotarev", suite_zolotarev}, {"lattice", suite_lattice},
        {"beta", suite_beta},     {"decomp", suite_decomp},       {"hecke", suite_hecke},
        {"classify", suite_classify}, {"jordan", suite_jordan},   {"method", suite_method}};
    return t;
}

void validate(const VerifyOptions& opt) {
    require(opt.qmax >= 3 && opt.qmax <= 23 && is_prime(opt.qmax), "--qmax must be an odd prime <= 23");
    require(opt.nmax >= 1 && opt.nmax <= 4, "--nmax must be in [1, 4]");
    require(opt.relprec >= 4 && opt.relprec <= 4096, "--relprec must be in [4, 4096]");
}

}  // namespace

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
    validate(opt);
    const auto& t = suite_table();
    const auto it = t.find(name);
    require(it != t.end(), "unknown suite: " + name);
    SuiteReport r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        it->second(r, opt);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Budget || e.kind() == ErrorKind::InvalidArgument) throw;
        r.check(false, "-", "exception", e.what());
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const VerifyOptions& opt) {
    std::vector<std::string> list;
    for (const auto& n : names) {
        if (n == "all")
            list.insert(list.end(), suite_names().begin(), suite_names().end());
        else
            list.push_back(n);
    }
    std::vector<SuiteReport> out;
    for (const auto& n : list) out.push_back(run_suite(n, opt));
    return out;
}

std::string reports_json(const std::vector<SuiteReport>& r, const VerifyOptions& opt, int indent) {
    nlohmann::ordered_json o;
    o["options"] = {{"qmax", opt.qmax}, {"nmax", opt.nmax}, {"seed", opt.seed},
                    {"decomp_instances", opt.decomp_instances}, {"relprec", opt.relprec}};
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    std::size_t failures = 0;
    for (const auto& s : r) {
        nlohmann::ordered_json fs = nlohmann::ordered_json::array();
        for (const auto& f : s.failures) fs.push_back({{"case", f.key}, {"identity", f.what}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        failures += s.failures.size();
        nlohmann::ordered_json sm = nlohmann::ordered_json::object();
        for (const auto& [k, v] : s.summary) sm[k] = v;
        arr.push_back({{"suite", s.name}, {"cases", s.cases}, {"failures", fs}, {"summary", sm}, {"pass", s.ok()},
                       {"wall_ms", std::round(s.wall_ms * 10) / 10}});
    }
    o["suites"] = arr;
    o["failures"] = failures;
    o["pass"] = failures == 0;
    return o.dump(indent);
}

std::string reports_text(const std::vector<SuiteReport>& r) {
    std::ostringstream os;
    for (const auto& s : r) {
        os << (s.ok() ? "PASS " : "FAIL ") << s.name << ": " << s.cases << " cases, " << s.failures.size()
           << " failures, " << static_cast<long>(s.wall_ms) << " ms\n";
        for (const auto& [k, v] : s.summary) os << "  " << k << ": " << v << "\n";
        for (const auto& f : s.failures) {
            os << "  [" << f.key << "] " << f.what << "\n";
            if (!f.lhs.empty()) os << "    lhs: " << f.lhs << "\n";
            if (!f.rhs.empty()) os << "    rhs: " << f.rhs << "\n";
        }
    }
    return os.str();
}

}  // namespace cusplab
