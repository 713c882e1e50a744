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
#include <string>
#include <vector>

#include "cusplab/matrix.hpp"
#include "cusplab/residue.hpp"

namespace cusplab {

/// Affine generic character of I(1)/I(2), stored by residues: alpha_1..alpha_N
/// and the residue of t * alpha_2N as the last entry.
struct AffGenChar {
    const ResidueField* k = nullptr;
    std::vector<Fq> alpha;  // size N + 1, all nonzero

    std::size_t N() const { return alpha.size() - 1; }
    Fq alpha_2N() const { return alpha.back(); }
    bool operator==(const AffGenChar& o) const { return k == o.k && alpha == o.alpha; }
    bool operator!=(const AffGenChar& o) const { return !(*this == o); }
    /// "(a1, ..., aN; a2N)"
    std::string render() const;
};

AffGenChar make_char(const ResidueField& k, const std::vector<Fq>& alpha);
/// parameters of psi_beta: (-2, ..., -2, -1; 1)
AffGenChar from_beta(const ResidueField& k, std::size_t N);
/// psi replaced by x -> psi(a x): every parameter is a
AffGenChar from_psi_twist(const ResidueField& k, std::size_t N, Fq a);

/// conjugation by diag(d_1..d_N, 1/d_N..1/d_1)
AffGenChar conj_by_torus(const AffGenChar& l, const std::vector<Fq>& d);

struct OrbitInvariants {
    Sign alpha_N_class = 1;    // delta(alpha_N)
    Sign alpha_2N_class = 1;   // delta(alpha_2N residue)
    Fq product;                // (alpha_1...alpha_{N-1})^2 alpha_N alpha_2N
};
OrbitInvariants orbit_invariants(const AffGenChar& l);
/// criteria on the square classes and the product
bool same_orbit(const AffGenChar& a, const AffGenChar& b);
/// representative with alpha_i = -1 (i < N) and alpha_N in {-1, -eps}
AffGenChar canonical(const AffGenChar& l);
/// one representative per orbit, sorted by (alpha_N, alpha_2N)
std::vector<AffGenChar> canonical_representatives(const ResidueField& k, std::size_t N);

/// every tuple of (k^x)^{N+1}, in lexicographic order of the enumeration
std::vector<AffGenChar> all_characters(const ResidueField& k, std::size_t N);
std::size_t character_index(const AffGenChar& l);

struct OrbitCensus {
    std::size_t tuples = 0;
    std::size_t orbits = 0;           // connected components of the torus action
    bool criteria_match = true;       // same_orbit agrees with the components
    bool canonical_match = true;      // canonical() is constant on components
    std::uint64_t pairs_checked = 0;  // exhaustive pair comparisons, if requested
};
/// brute-force orbits by union-find over generator moves; pair comparison
/// is quadratic in (q-1)^{N+1}, so only run it for small cases
OrbitCensus orbit_census(const ResidueField& k, std::size_t N, bool all_pairs);
/// asserts agreement with the criteria, throws Identity otherwise
std::size_t orbit_count(const ResidueField& k, std::size_t N);
/// two central characters per orbit
std::size_t cuspidal_count(const ResidueField& k, std::size_t N);

/// conjugation by diag(eps, ..., eps, 1, ..., 1) in GSp, eps the smallest
/// non-square: alpha_N -> eps alpha_N, alpha_2N -> alpha_2N / eps
AffGenChar gsp_twist(const AffGenChar& l);

/// generator of k^x
Fq primitive_element(const ResidueField& k);

/// Cayley transform (1 + X/2)(1 - X/2)^-1
MatLS cayley(const MatLS& X, long relprec = 0);
/// symplectic element of I(1) whose coordinate j in I(1)/I(2) is u and the
/// others vanish; j = N is the corner coordinate t^-1 x_{2N,1}
MatLS coordinate_element(const ResidueField& k, std::size_t N, std::size_t j, Fq u);
/// coordinates (x_{12}, ..., x_{N,N+1}, res t^-1 x_{2N,1}) of x in I(1)
std::vector<Fq> coordinates(const MatLS& x);
/// sum_j alpha_j coordinate_j(x)
Fq character_argument(const AffGenChar& l, const MatLS& x);

}  // namespace cusplab
