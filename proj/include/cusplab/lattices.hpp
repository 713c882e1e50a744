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

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cusplab/matrix.hpp"

namespace cusplab {

using IntVec = std::vector<long>;

/// Bound meaning "entry must vanish"; used for subgroup shapes.
inline constexpr long kNoEntry = 1L << 40;

/// Alternating form with monomial Gram matrix: e_i pairs with e_partner(i)
/// through sign_i * t^gval_i.
struct FormDescriptor {
    std::string kind;
    std::vector<std::size_t> partner;
    std::vector<int> sign;
    std::vector<long> gval;

    std::size_t dim() const { return partner.size(); }
    /// checks partner is an involution without fixed points and the Gram
    /// matrix is antisymmetric
    bool alternating() const;
};

/// h_{2N}: x_1 y_{2N} + ... + x_N y_{N+1} - x_{N+1} y_N - ... - x_{2N} y_1
FormDescriptor form_h(std::size_t n);
/// h on X = V + V + V: h(a, c') + h(b, b') + h(c, a'), V of dimension 2N
FormDescriptor form_bold_h(std::size_t N);

/// Standard-split lattice sequence: Lambda(k) = sum_i p^{a_i(k)} e_i.
class LatticeSeq {
public:
    LatticeSeq() = default;
    /// table[k] = a(k) for k in [0, period); validated
    LatticeSeq(long period, std::vector<IntVec> table);
    static LatticeSeq from_function(std::size_t n, long period, const std::function<IntVec(long)>& a);

    std::size_t dim() const { return n_; }
    long period() const { return e_; }
    IntVec at(long k) const;
    long at(long k, std::size_t i) const;
    bool operator==(const LatticeSeq& o) const;

    /// t in [lo, hi) with Lambda(t) != Lambda(t+1), looking only at coords
    /// [c0, c1)
    std::vector<long> jumps(long lo, long hi, std::size_t c0 = 0, std::size_t c1 = SIZE_MAX) const;

private:
    std::size_t n_ = 0;
    long e_ = 0;
    std::vector<IntVec> table_;
};

/// dual lattice of a single lattice, as a valuation vector
IntVec sharp(const IntVec& a, const FormDescriptor& h);
/// k -> Lambda(-k)^sharp
LatticeSeq dual(const LatticeSeq& L, const FormDescriptor& h);
/// d with Lambda(k)^sharp = Lambda(d - k) for all k, if any
std::optional<long> duality_invariant(const LatticeSeq& L, const FormDescriptor& h);
/// (e' Lambda)(s) = Lambda(ceil(s/e'))
LatticeSeq dilate(const LatticeSeq& L, long e);
/// (Lambda - d)(t) = Lambda(t - d)
LatticeSeq translate(const LatticeSeq& L, long d);
LatticeSeq direct_sum(const LatticeSeq& A, const LatticeSeq& B);
/// coordinate i of the result is coordinate perm[i] of L
LatticeSeq permute(const LatticeSeq& L, const std::vector<std::size_t>& perm);

/// Integer bounds: {M : val(M_ij) >= B_ij}.
class ValMatrix {
public:
    ValMatrix() = default;
    ValMatrix(std::size_t rows, std::size_t cols, long fill = 0) : r_(rows), c_(cols), b_(rows * cols, fill) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    long& operator()(std::size_t i, std::size_t j) { return b_[i * c_ + j]; }
    long operator()(std::size_t i, std::size_t j) const { return b_[i * c_ + j]; }
    bool operator==(const ValMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && b_ == o.b_; }
    bool operator!=(const ValMatrix& o) const { return !(*this == o); }

    /// the lattice of matrices this describes lies inside o's
    bool subset_of(const ValMatrix& o) const;
    /// multiplication by t^k
    ValMatrix shifted(long k) const;
    ValMatrix block(std::size_t i0, std::size_t j0, std::size_t rows, std::size_t cols) const;
    void set_block(std::size_t i0, std::size_t j0, const ValMatrix& b);
    /// val(M_ij) >= B_ij for all entries; zero-to-precision entries need
    /// precision >= the bound, else Precision is thrown
    bool contains(const MatLS& m) const;
    /// grid of "p^k" entries
    std::string render() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<long> b_;
};

/// A_r(Lambda): B_ij = max_k a_i(k + r) - a_j(k)
ValMatrix order_filtration(const LatticeSeq& L, long r);
/// Hom(src, dst) part: B_ij = max_k a^dst_i(k + r) - a^src_j(k)
ValMatrix hom_block_lattice(const LatticeSeq& src, const LatticeSeq& dst, long r);
/// max r with M in A_r(Lambda)
long val_wrt(const LatticeSeq& L, const MatLS& m);
/// g Lambda(k) = Lambda(k) for every k, g monomial
bool stabilizes(const MonomialData& g, const LatticeSeq& L);
/// bounds of t B t^-1 for monomial t
ValMatrix conjugate_bounds(const ValMatrix& B, const MonomialData& t);

// --- the sequences used throughout ---

/// Lambda_{2N}: period 4N, jumps at odd integers, Lambda(0) = (o^N, p^N)
LatticeSeq standard_chain_2N(std::size_t N);
/// Sigma_{2N}(t) = Lambda_{2N}(2t): period 2N
LatticeSeq sigma_2N(std::size_t N);
/// on W + W*: constant (o, p) on [-N+1, N], period 4N
LatticeSeq lambda_2(std::size_t N);
/// m_0 built on (o, o) and m_1 built on (o, p), both period 4N
LatticeSeq m0_pair(std::size_t N);
LatticeSeq m1_pair(std::size_t N);
/// pair (+) Lambda_{2N} in the coordinates x_0, x_1..x_2N, x_{2N+1}
LatticeSeq embed_pair(const LatticeSeq& pair, const LatticeSeq& chain);
/// (3 Lambda_W - 2) + 3 Lambda_V + (3 Lambda_W* + 2)
LatticeSeq lambda_X(std::size_t N);

/// rows/columns of the W / W* blocks of A_r(Lambda_2 + Lambda_2N)
struct PairBlocks {
    ValMatrix R1, R2;  // 1 x 2N: W-row, W*-row
    ValMatrix C1, C2;  // 2N x 1: W-column, W*-column
};
PairBlocks pair_blocks(const LatticeSeq& L, long r);

/// smallest k with E cap B = p_E^k for the 2N x 2N bound matrix B, where
/// E = F[beta]; nullopt when the intersection is not of that form
std::optional<long> e_part_exponent(const ValMatrix& B, std::size_t N);

}  // namespace cusplab
