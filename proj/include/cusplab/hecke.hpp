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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cusplab/exactnum.hpp"
#include "cusplab/localfield.hpp"
#include "cusplab/residue.hpp"

namespace cusplab {

enum class DeltaKind { Quadratic, Trivial };

inline constexpr std::uint64_t kDefaultTermBudget = 100000000ULL;

/// sum_{u in k^x} delta(-u) sum_{x in k} psi_a(x^2 / u)
CycNum b1_gl1(const ResidueField& k, Fq a);
/// sum_{u in k^x} delta(-u) sum_{x in k} psi_a(-x^2 / u)
CycNum b0_gl1(const ResidueField& k, Fq a);
/// sum over (a, u) in (k^x)^2 with 2a + u^2 = 0 of delta(a) chi(-1)
CycNum b0_gl2n(const ResidueField& k, Sign chi_m1);

/// number of terms of b1_gl2n_full: q^{2N} (q - 1)
std::uint64_t b1_gl2n_terms(const ResidueField& k, std::size_t N);
/// d_{2N}^2 + d_N^2 + 2 sum_{i<N} d_i d_{2N-i} - 2 sum_{i<=N} d_i d_{2N+1-i}
Fq b1_quadratic_form(const ResidueField& k, const std::vector<Fq>& d);
/// sum over d in k^{2N}, z in k^x of delta(z) psi_a(Q(d) / z); the z loop is
/// split across workers. Throws Budget above `budget` terms.
CycNum b1_gl2n_full(const ResidueField& k, std::size_t N, DeltaKind kind, Fq a,
                    std::uint64_t budget = kDefaultTermBudget, unsigned workers = 0);
/// sum over d in k, z in k^x of delta(z) psi_a(d^2 / z)
CycNum b1_gl2n_reduced(const ResidueField& k, DeltaKind kind, Fq a);
/// the factor between full and reduced sums: q^N
mpz_class b1_reduction_factor(const ResidueField& k, std::size_t N);

// closed forms
CycNum b1_gl1_closed(const ResidueField& k, Fq a);    // (q-1) delta(-1) G
CycNum b0_gl1_closed(const ResidueField& k, Fq a);    // (q-1) G
CycNum b0_gl2n_closed(const ResidueField& k, Sign chi_m1);  // (q-1) chi(-1) delta(-2)
CycNum b1_gl2n_closed(const ResidueField& k, std::size_t N, DeltaKind kind, Fq a);  // q^N (q-1) G or 0

/// T^2 = b T + c, with c only known up to a positive factor
struct QuadRelation {
    CycNum b;
    mpq_class c;
    bool c_positive = true;

    /// (T + 1)(T - q^r) = 0
    static QuadRelation normalized(const ResidueField& k, long r);
    /// r >= 0 with root quotient -q^r, i.e. b^2 q^r = c (q^r - 1)^2 and b >= 0
    std::optional<long> root_exponent(long q, long rmax = 64) const;
    std::string render() const;
};

/// values of the generators at the Weyl representatives, up to positive scalars
struct GeneratorPair {
    RayClass T0_val, T1_val;
    long r0 = 1, r1 = 1;
    bool c0_positive = false, c1_positive = false;
};

/// T from a coefficient sum b = T * S: b >= 0 forces T in the class of conj(S)
RayClass normalize_against(const CycNum& sum);
/// c ~ T(w) T(w^-1) = T(w)^2 * (type character at w^-2); positive?
bool c_positive(const RayClass& t, Sign char_at_w_inv_sq);

/// derived from the b sums (not from the closed forms)
GeneratorPair gl1_generator_norms(const ResidueField& k, Fq a);
/// throws Domain for trivial delta: there is no reducibility at 1 to normalise
GeneratorPair gl2n_generator_norms(const ResidueField& k, std::size_t N, Sign chi_m1, Fq a,
                                   DeltaKind kind = DeltaKind::Quadratic);

std::vector<mpq_class> four_values(long r0, long r1, long q);
/// (s_a, s_b) = ((r0 + r1) / 2v, |r0 - r1| / 2v)
std::pair<mpq_class, mpq_class> reducibility_exponents(long r0, long r1, long v);

struct SelfDualChoice {
    RayClass lambda_a, lambda_b;
    bool degenerate = false;  // r0 r1 = 0: both points share the value
};
SelfDualChoice select_selfdual(const GeneratorPair& g);

/// zeta times the inverse of chi(Pi)
RayClass twist_value(const RayClass& zeta, const CycNum& chi_at_pi);

/// normalisation of Psi and the base-point values under unramified twists
struct MethodState {
    RayClass psi_norm;
    std::map<std::string, RayClass> zeta;  // twist label -> value at Psi

    /// new state after twisting by chi with chi(Pi) = chi_at_pi
    MethodState twisted(const std::string& label, const CycNum& chi_at_pi) const;
};

struct TraceSides {
    LSeries closed, matrix;
};
/// tr(aD D) = 2 (d_1 d_2N + ... + d_N d_{N+1})
TraceSides trace_aDD(const std::vector<LSeries>& d);
/// tr(beta D beta^-1 aD) = d_2N^2 + d_N^2 + 2 (d_1 d_{2N-1} + ... + d_{N-1} d_{N+1})
TraceSides trace_conj(const std::vector<LSeries>& d);

}  // namespace cusplab
