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
#include <random>
#include <utility>

#include "cusplab/exactnum.hpp"
#include "cusplab/lattices.hpp"
#include "cusplab/matrix.hpp"

namespace cusplab {

MatLS gram_matrix(const ResidueField& k, const FormDescriptor& h);
/// transpose along the antidiagonal
MatLS adjoint_gl(const MatLS& m);
/// G^-1 M^T G, so that h(Mx, y) = h(x, adjoint_sp(M) y)
MatLS adjoint_sp(const MatLS& m, const FormDescriptor& h);

struct FormCheck {
    bool ok = false;
    long precision = 0;  // absolute precision to which M^T G M = G was tested
};
FormCheck preserves_form(const MatLS& m, const FormDescriptor& h);

/// M preserves h (skipped when h is null, i.e. GL) and M - 1 in A_level(L)
bool is_in_group(const MatLS& m, const FormDescriptor* h, long level, const LatticeSeq& L);

/// beta: t^-1 in the corner (1, 2N), -1 at (i+1, i) for i <= N and +1 at
/// (i+1, i) for N < i < 2N
MatLS beta_matrix(const ResidueField& k, std::size_t N);
/// diag(beta, beta, beta) on X
MatLS beta_X(const ResidueField& k, std::size_t N);

/// residue of tr(beta (x - 1)) at t^0; x must lie in 1 + A_1(Lambda_2N)
Fq psi_beta_argument(const MatLS& x);
CycNum psi_beta(const MatLS& x, Fq a);
inline CycNum psi_beta(const MatLS& x) { return psi_beta(x, x.field().one()); }

struct WeylPair {
    MatLS s0, s1;
};
/// t0, t1 on x_0, V, x_{2N+1}
WeylPair weyl_gl1(const ResidueField& k, std::size_t N);
/// w0, w1 on X = V + V + V
WeylPair weyl_gl2n(const ResidueField& k, std::size_t N);

/// [[I,0,0],[D,I,0],[Z,H,I]] and [[I,H,Z],[0,I,D],[0,0,I]]
MatLS lower_unipotent(const MatLS& D, const MatLS& Z, const MatLS& H);
MatLS upper_unipotent(const MatLS& H, const MatLS& Z, const MatLS& D);
/// diag(m, g, adjoint(m)^-1)
MatLS levi(const MatLS& m, const MatLS& g, long relprec = 0);

/// Blocks of the Iwahori factorisation. For the lower-unipotent input
///   x = [[I,B1,E1],[0,I,F1],[0,0,I]] w0 diag(m, g, am^-1) [[I,B2,E2],[0,I,F2],[0,0,I]]
/// and for the upper-unipotent input
///   x = [[I,0,0],[F1,I,0],[E1,B1,I]] w1 diag(m, g, am^-1) [[I,0,0],[F2,I,0],[E2,B2,I]]
struct IwahoriFactors {
    MatLS m, g, B1, B2, E1, E2, F1, F2;
};
/// Z must be invertible and Z + aZ + aD D = 0
IwahoriFactors solve_inf(const MatLS& D, const MatLS& Z, long relprec = 0);
IwahoriFactors solve_sup(const MatLS& D, const MatLS& Z, long relprec = 0);
MatLS reconstruct_inf(const IwahoriFactors& f, long relprec = 0);
MatLS reconstruct_sup(const IwahoriFactors& f, long relprec = 0);

/// Z + aZ + aD D, zero exactly when the unipotent element is symplectic
MatLS symplectic_defect(const MatLS& D, const MatLS& Z);

struct RandomPair {
    MatLS D, Z;
};
/// D with entries in o (degree < 3), Z = -aD D / 2 + (R - aR) / 2
RandomPair random_constraint_pair(const ResidueField& k, std::size_t N, std::mt19937_64& rng);
LSeries random_integral(const ResidueField& k, std::mt19937_64& rng, long min_val, int terms);

enum class GammaCase { Gamma, GammaPrime };
/// Gamma: [[1,B,t^-1 u],[0,I,C],[0,0,1]] in Sp with u a unit, B integral.
/// GammaPrime: [[1,0,0],[D,I,0],[u,H,1]] in Sp with u a unit,
/// H in p^N x o^N.
bool gamma_membership(GammaCase c, const MatLS& x);
/// c_i = b_{2N-i+1} for i <= N, c_i = -b_{2N-i+1} for i > N, and B C = 0
bool gl1_relations(const MatLS& B, const MatLS& C);

}  // namespace cusplab
