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

#include "cusplab/lattices.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cusplab/error.hpp"

namespace cusplab {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

bool FormDescriptor::alternating() const {
    const std::size_t n = dim();
    if (sign.size() != n || gval.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = partner[i];
        if (j >= n || j == i || partner[j] != i) return false;
        if (sign[j] != -sign[i] || gval[j] != gval[i]) return false;
    }
    return true;
}

FormDescriptor form_h(std::size_t n) {
    require(n >= 2 && n % 2 == 0, "h needs even dimension");
    FormDescriptor h;
    h.kind = "h_" + std::to_string(n);
    for (std::size_t i = 0; i < n; ++i) {
        h.partner.push_back(n - 1 - i);
        h.sign.push_back(i < n / 2 ? 1 : -1);
        h.gval.push_back(0);
    }
    return h;
}

FormDescriptor form_bold_h(std::size_t N) {
    require(N >= 1, "N must be positive");
    const FormDescriptor h = form_h(2 * N);
    const std::size_t n = 2 * N;
    FormDescriptor H;
    H.kind = "bold_h_" + std::to_string(6 * N);
    H.partner.resize(3 * n);
    H.sign.resize(3 * n);
    H.gval.assign(3 * n, 0);
    // block a pairs with block c, b with b
    for (std::size_t blk = 0; blk < 3; ++blk)
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t other = 2 - blk;
            H.partner[blk * n + i] = other * n + h.partner[i];
            H.sign[blk * n + i] = h.sign[i];
        }
    return H;
}

LatticeSeq::LatticeSeq(long period, std::vector<IntVec> table) : e_(period), table_(std::move(table)) {
    require(period >= 1 && static_cast<long>(table_.size()) == period, "table must cover one period");
    n_ = table_[0].size();
    require(n_ >= 1, "dimension must be positive");
    for (long k = 0; k < period; ++k) {
        require(table_[k].size() == n_, "inconsistent dimension");
        const IntVec next = at(k + 1);
        for (std::size_t i = 0; i < n_; ++i)
            require(next[i] >= table_[k][i], "lattice sequence must be decreasing");
    }
}

LatticeSeq LatticeSeq::from_function(std::size_t n, long period, const std::function<IntVec(long)>& a) {
    std::vector<IntVec> table;
    for (long k = 0; k < period; ++k) {
        table.push_back(a(k));
        require(table.back().size() == n, "dimension mismatch");
    }
    LatticeSeq L(period, std::move(table));
    // the function itself must be periodic up to t
    for (long k = -2 * period; k < 2 * period; ++k)
        require(L.at(k) == a(k), "function is not a lattice sequence of the given period");
    return L;
}

IntVec LatticeSeq::at(long k) const {
    const long q = floor_div(k, e_);
    IntVec v = table_[k - q * e_];
    for (auto& x : v) x += q;
    return v;
}

long LatticeSeq::at(long k, std::size_t i) const {
    const long q = floor_div(k, e_);
    return table_[k - q * e_][i] + q;
}

bool LatticeSeq::operator==(const LatticeSeq& o) const {
    if (n_ != o.n_) return false;
    const long L = std::lcm(e_, o.e_);
    for (long k = 0; k < L; ++k)
        if (at(k) != o.at(k)) return false;
    return true;
}

std::vector<long> LatticeSeq::jumps(long lo, long hi, std::size_t c0, std::size_t c1) const {
    c1 = std::min(c1, n_);
    std::vector<long> out;
    for (long t = lo; t < hi; ++t)
        for (std::size_t i = c0; i < c1; ++i)
            if (at(t, i) != at(t + 1, i)) {
                out.push_back(t);
                break;
            }
    return out;
}

// x in L^sharp iff val(x_i) + g_i + a_partner(i) >= 1 for all i
IntVec sharp(const IntVec& a, const FormDescriptor& h) {
    require(a.size() == h.dim(), "form dimension mismatch");
    IntVec b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = 1 - h.gval[i] - a[h.partner[i]];
    return b;
}

LatticeSeq dual(const LatticeSeq& L, const FormDescriptor& h) {
    return LatticeSeq::from_function(L.dim(), L.period(), [&](long k) { return sharp(L.at(-k), h); });
}

std::optional<long> duality_invariant(const LatticeSeq& L, const FormDescriptor& h) {
    const long e = L.period();
    const IntVec s0 = sharp(L.at(0), h);
    for (long d = -4 * e; d <= 4 * e; ++d) {
        if (L.at(d) != s0) continue;
        bool ok = true;
        for (long k = 1; k < 2 * e && ok; ++k) ok = sharp(L.at(k), h) == L.at(d - k);
        if (ok) return d;
    }
    return std::nullopt;
}

LatticeSeq dilate(const LatticeSeq& L, long e) {
    require(e >= 1, "dilation factor must be positive");
    return LatticeSeq::from_function(L.dim(), L.period() * e, [&](long s) { return L.at(ceil_div(s, e)); });
}

LatticeSeq translate(const LatticeSeq& L, long d) {
    return LatticeSeq::from_function(L.dim(), L.period(), [&](long t) { return L.at(t - d); });
}

LatticeSeq direct_sum(const LatticeSeq& A, const LatticeSeq& B) {
    if (A.period() != B.period()) fail(ErrorKind::InvalidArgument, "direct sum needs equal periods");
    return LatticeSeq::from_function(A.dim() + B.dim(), A.period(), [&](long t) {
        IntVec v = A.at(t);
        const IntVec w = B.at(t);
        v.insert(v.end(), w.begin(), w.end());
        return v;
    });
}

LatticeSeq permute(const LatticeSeq& L, const std::vector<std::size_t>& perm) {
    require(perm.size() == L.dim(), "permutation size mismatch");
    return LatticeSeq::from_function(L.dim(), L.period(), [&](long t) {
        const IntVec a = L.at(t);
        IntVec v(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[perm[i]];
        return v;
    });
}

bool ValMatrix::subset_of(const ValMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) fail(ErrorKind::InvalidArgument, "shape mismatch");
    for (std::size_t i = 0; i < b_.size(); ++i)
        if (b_[i] < o.b_[i]) return false;
    return true;
}

ValMatrix ValMatrix::shifted(long k) const {
    ValMatrix m = *this;
    for (auto& x : m.b_)
        if (x < kNoEntry) x += k;
    return m;
}

ValMatrix ValMatrix::block(std::size_t i0, std::size_t j0, std::size_t rows, std::size_t cols) const {
    require(i0 + rows <= r_ && j0 + cols <= c_, "block out of range");
    ValMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
    return m;
}

void ValMatrix::set_block(std::size_t i0, std::size_t j0, const ValMatrix& b) {
    require(i0 + b.r_ <= r_ && j0 + b.c_ <= c_, "block out of range");
    for (std::size_t i = 0; i < b.r_; ++i)
        for (std::size_t j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
}

bool ValMatrix::contains(const MatLS& m) const {
    require(m.rows() == r_ && m.cols() == c_, "shape mismatch");
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) {
            const LSeries& x = m(i, j);
            const long b = (*this)(i, j);
            if (x.is_zero()) {
                if (b < kNoEntry && x.prec() < b)
                    fail(ErrorKind::Precision, "entry known only to t^" + std::to_string(x.prec()));
                continue;
            }
            if (b >= kNoEntry || x.val() < b) return false;
        }
    return true;
}

std::string ValMatrix::render() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) {
            const long b = (*this)(i, j);
            std::string cell = b >= kNoEntry ? "0" : "p^" + std::to_string(b);
            os << (j ? " " : "") << cell;
            for (std::size_t pad = cell.size(); pad < 5; ++pad) os << ' ';
        }
        os << '\n';
    }
    return os.str();
}

ValMatrix hom_block_lattice(const LatticeSeq& src, const LatticeSeq& dst, long r) {
    const long L = std::lcm(src.period(), dst.period());
    ValMatrix B(dst.dim(), src.dim());
    for (std::size_t i = 0; i < dst.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j) {
            long best = LONG_MIN;
            for (long k = 0; k < L; ++k) best = std::max(best, dst.at(k + r, i) - src.at(k, j));
            B(i, j) = best;
        }
    return B;
}

ValMatrix order_filtration(const LatticeSeq& L, long r) { return hom_block_lattice(L, L, r); }

// B(r + e) = B(r) + 1, so it suffices to tabulate one period
long val_wrt(const LatticeSeq& L, const MatLS& m) {
    require(m.rows() == L.dim() && m.cols() == L.dim(), "shape mismatch");
    const long e = L.period();
    std::vector<ValMatrix> B;
    for (long s = 0; s < e; ++s) B.push_back(order_filtration(L, s));
    bool any = false;
    long best = LONG_MAX;
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) {
            const LSeries& x = m(i, j);
            if (x.is_zero()) continue;
            any = true;
            const long v = x.val();
            long rij = LONG_MIN;
            for (long s = 0; s < e; ++s) rij = std::max(rij, (v - B[s](i, j)) * e + s);
            best = std::min(best, rij);
        }
    if (!any) fail(ErrorKind::Domain, "val_wrt of zero matrix");
    return best;
}

bool stabilizes(const MonomialData& g, const LatticeSeq& L) {
    require(g.perm.size() == L.dim(), "dimension mismatch");
    // g e_j = c e_i with perm[i] = j, so g maps p^{a_j} e_j to p^{a_j + val_i} e_i
    for (long k = 0; k < L.period(); ++k) {
        const IntVec a = L.at(k);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[g.perm[i]] + g.val[i] != a[i]) return false;
    }
    return true;
}

// (t M t^-1)_ij = c_i M_{perm i, perm j} c_j^-1
ValMatrix conjugate_bounds(const ValMatrix& B, const MonomialData& t) {
    require(B.rows() == t.perm.size() && B.cols() == t.perm.size(), "dimension mismatch");
    ValMatrix out(B.rows(), B.cols());
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) {
            const long b = B(t.perm[i], t.perm[j]);
            out(i, j) = b >= kNoEntry ? kNoEntry : b + t.val[i] - t.val[j];
        }
    return out;
}

// Lambda(-2N+2m) = Lambda(-2N+2m+1) is column 2N-m of the order: o in the
// first 2N-m rows, p below.
LatticeSeq standard_chain_2N(std::size_t N) {
    require(N >= 1, "N must be positive");
    const long n = static_cast<long>(2 * N);
    return LatticeSeq::from_function(n, 2 * n, [n](long t) {
        const long m = floor_div(t + n, 2);
        const long q = floor_div(m, n), r = m - q * n;
        const long col = n - r;
        IntVec a(n);
        for (long i = 1; i <= n; ++i) a[i - 1] = q + (i > col ? 1 : 0);
        return a;
    });
}

LatticeSeq sigma_2N(std::size_t N) {
    const LatticeSeq L = standard_chain_2N(N);
    return LatticeSeq::from_function(2 * N, static_cast<long>(2 * N), [&](long t) { return L.at(2 * t); });
}

LatticeSeq lambda_2(std::size_t N) {
    const long n = static_cast<long>(N);
    return LatticeSeq::from_function(2, 4 * n, [n](long t) {
        return IntVec{floor_div(t + 3 * n - 1, 4 * n), floor_div(t + 5 * n - 1, 4 * n)};
    });
}

LatticeSeq m0_pair(std::size_t N) {
    const long n = static_cast<long>(N);
    return LatticeSeq::from_function(2, 4 * n, [n](long t) {
        const long a = ceil_div(t, 4 * n);
        return IntVec{a, a};
    });
}

LatticeSeq m1_pair(std::size_t N) {
    const long n = static_cast<long>(N);
    return LatticeSeq::from_function(2, 4 * n, [n](long t) {
        return IntVec{floor_div(t + 2 * n - 1, 4 * n), floor_div(t + 6 * n - 1, 4 * n)};
    });
}

LatticeSeq embed_pair(const LatticeSeq& pair, const LatticeSeq& chain) {
    require(pair.dim() == 2, "pair must be two-dimensional");
    const LatticeSeq s = direct_sum(pair, chain);
    const std::size_t n = chain.dim();
    std::vector<std::size_t> perm(n + 2);
    perm[0] = 0;
    for (std::size_t i = 1; i <= n; ++i) perm[i] = i + 1;
    perm[n + 1] = 1;
    return permute(s, perm);
}

LatticeSeq lambda_X(std::size_t N) {
    const LatticeSeq L = standard_chain_2N(N);
    const LatticeSeq W = translate(dilate(L, 3), 2);
    const LatticeSeq V = dilate(L, 3);
    const LatticeSeq Wd = translate(dilate(L, 3), -2);
    return direct_sum(direct_sum(W, V), Wd);
}

PairBlocks pair_blocks(const LatticeSeq& L, long r) {
    const std::size_t n = L.dim() - 2;
    const ValMatrix A = order_filtration(L, r);
    PairBlocks b;
    b.R1 = A.block(0, 1, 1, n);
    b.R2 = A.block(n + 1, 1, 1, n);
    b.C1 = A.block(1, 0, n, 1);
    b.C2 = A.block(1, n + 1, n, 1);
    return b;
}

// beta sends e_c to +-e_{c+1} (c < 2N) and e_{2N} to t^-1 e_1, so beta^j
// sends e_c to e_{c+j mod 2N} with valuation -floor((c + j)/2N), 0-based c.
std::optional<long> e_part_exponent(const ValMatrix& B, std::size_t N) {
    const long n = static_cast<long>(2 * N);
    require(B.rows() == 2 * N && B.cols() == 2 * N, "block must be 2N x 2N");
    std::vector<long> m(n);
    for (long j = 0; j < n; ++j) {
        long need = LONG_MIN;
        for (long c = 0; c < n; ++c) {
            const long r = (c + j) % n;
            const long v = -floor_div(c + j, n);
            need = std::max(need, B(r, c) - v);
        }
        m[j] = need;
    }
    // p_E^k = sum_j p^{ceil((k + j)/2N)} beta^j
    for (long k = n * (m[0] - 1) + 1; k <= n * m[0]; ++k) {
        bool ok = true;
        for (long j = 0; j < n && ok; ++j) ok = m[j] == ceil_div(k + j, n);
        if (ok) return k;
    }
    return std::nullopt;
}

}  // namespace cusplab
