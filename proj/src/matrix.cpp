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

#include "cusplab/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "cusplab/error.hpp"

namespace cusplab {

MatLS::MatLS(const ResidueField& k, std::size_t rows, std::size_t cols)
    : k_(&k), r_(rows), c_(cols), e_(rows * cols, LSeries(k)) {}

MatLS MatLS::identity(const ResidueField& k, std::size_t n) {
    return scalar(k, n, LSeries::integer(k, 1));
}

MatLS MatLS::scalar(const ResidueField& k, std::size_t n, const LSeries& s) {
    MatLS m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

MatLS MatLS::diag(const std::vector<LSeries>& d) {
    require(!d.empty(), "diag needs at least one entry");
    MatLS m(d[0].field(), d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

MatLS MatLS::blocks3(const MatLS (&b)[3][3]) {
    std::size_t h[3], w[3];
    for (int i = 0; i < 3; ++i) {
        h[i] = b[i][0].rows();
        w[i] = b[0][i].cols();
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            require(b[i][j].rows() == h[i] && b[i][j].cols() == w[j], "block size mismatch");
    MatLS m(b[0][0].field(), h[0] + h[1] + h[2], w[0] + w[1] + w[2]);
    std::size_t i0 = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t j0 = 0;
        for (int j = 0; j < 3; ++j) {
            m.set_block(i0, j0, b[i][j]);
            j0 += w[j];
        }
        i0 += h[i];
    }
    return m;
}

void MatLS::check_dims(const MatLS& o) const {
    if (r_ != o.r_ || c_ != o.c_) fail(ErrorKind::InvalidArgument, "dimension mismatch");
}

MatLS MatLS::operator+(const MatLS& o) const {
    check_dims(o);
    MatLS m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
}

MatLS MatLS::operator-(const MatLS& o) const {
    check_dims(o);
    MatLS m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    return m;
}

MatLS MatLS::operator-() const {
    MatLS m = *this;
    for (auto& x : m.e_) x = -x;
    return m;
}

MatLS MatLS::operator*(const MatLS& o) const {
    if (c_ != o.r_) fail(ErrorKind::InvalidArgument, "dimension mismatch in product");
    MatLS m(*k_, r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t l = 0; l < c_; ++l) {
            const LSeries& a = (*this)(i, l);
            if (a.is_exact_zero()) continue;
            for (std::size_t j = 0; j < o.c_; ++j) {
                const LSeries& b = o(l, j);
                if (b.is_exact_zero()) continue;
                m(i, j) += a * b;
            }
        }
    return m;
}

MatLS MatLS::operator*(const LSeries& s) const {
    MatLS m = *this;
    for (auto& x : m.e_) x *= s;
    return m;
}

MatLS MatLS::transpose() const {
    MatLS m(*k_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

MatLS MatLS::anti_transpose() const {
    MatLS m(*k_, c_, r_);
    for (std::size_t i = 0; i < c_; ++i)
        for (std::size_t j = 0; j < r_; ++j) m(i, j) = (*this)(r_ - 1 - j, c_ - 1 - i);
    return m;
}

MatLS MatLS::block(std::size_t i0, std::size_t j0, std::size_t rows, std::size_t cols) const {
    require(i0 + rows <= r_ && j0 + cols <= c_, "block out of range");
    MatLS m(*k_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
    return m;
}

void MatLS::set_block(std::size_t i0, std::size_t j0, const MatLS& b) {
    require(i0 + b.r_ <= r_ && j0 + b.c_ <= c_, "block out of range");
    for (std::size_t i = 0; i < b.r_; ++i)
        for (std::size_t j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
}

namespace {

// index of the row >= col whose entry in column col has least valuation
std::size_t pick_pivot(const MatLS& a, std::size_t col) {
    std::size_t best = a.rows();
    long best_val = 0;
    bool unknown = false;
    for (std::size_t i = col; i < a.rows(); ++i) {
        const LSeries& x = a(i, col);
        if (x.is_zero()) {
            unknown = unknown || !x.is_exact_zero();
            continue;
        }
        if (best == a.rows() || x.val() < best_val) {
            best = i;
            best_val = x.val();
        }
    }
    if (best == a.rows() && unknown) fail(ErrorKind::Precision, "matrix is singular to precision");
    if (best == a.rows()) fail(ErrorKind::Domain, "matrix is singular");
    return best;
}

void swap_rows(MatLS& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

}  // namespace

MatLS MatLS::inverse(long relprec) const {
    if (!square()) fail(ErrorKind::InvalidArgument, "inverse of non-square matrix");
    const std::size_t n = r_;
    MatLS a = *this, inv = identity(*k_, n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t pr = pick_pivot(a, col);
        swap_rows(a, pr, col);
        swap_rows(inv, pr, col);
        const LSeries pinv = a(col, col).inv(relprec);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= pinv;
            inv(col, j) *= pinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_exact_zero()) continue;
            const LSeries f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(col, j).is_exact_zero()) a(i, j) -= f * a(col, j);
                if (!inv(col, j).is_exact_zero()) inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

LSeries MatLS::det(long relprec) const {
    if (!square()) fail(ErrorKind::InvalidArgument, "det of non-square matrix");
    const std::size_t n = r_;
    MatLS a = *this;
    LSeries d = LSeries::integer(*k_, 1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr;
        try {
            pr = pick_pivot(a, col);
        } catch (const Error&) {
            return LSeries::zero(*k_, a.min_prec());
        }
        if (pr != col) {
            swap_rows(a, pr, col);
            d = -d;
        }
        d *= a(col, col);
        const LSeries pinv = a(col, col).inv(relprec);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_exact_zero()) continue;
            const LSeries f = a(i, col) * pinv;
            for (std::size_t j = col; j < n; ++j)
                if (!a(col, j).is_exact_zero()) a(i, j) -= f * a(col, j);
        }
    }
    return d;
}

MatLS MatLS::pow(long e, long relprec) const {
    if (!square()) fail(ErrorKind::InvalidArgument, "power of non-square matrix");
    if (e < 0) return inverse(relprec).pow(-e, relprec);
    MatLS result = identity(*k_, r_), base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool MatLS::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

long MatLS::min_prec() const {
    long p = kExact;
    for (const auto& x : e_) p = std::min(p, x.prec());
    return p;
}

std::string MatLS::render() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < r_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < c_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j).render();
        }
        os << "]\n";
    }
    return os.str();
}

MonomialData monomial_data(const MatLS& m) {
    require(m.square(), "monomial matrix must be square");
    MonomialData d;
    d.perm.assign(m.rows(), m.cols());
    d.val.assign(m.rows(), 0);
    std::vector<char> used(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const LSeries& x = m(i, j);
            if (!x.is_exact()) fail(ErrorKind::InvalidArgument, "monomial matrix must be exact");
            if (x.is_zero()) continue;
            if (x.coeffs().size() != 1 || d.perm[i] != m.cols() || used[j])
                fail(ErrorKind::InvalidArgument, "not a monomial matrix");
            d.perm[i] = j;
            d.val[i] = x.val();
            used[j] = 1;
        }
        if (d.perm[i] == m.cols()) fail(ErrorKind::InvalidArgument, "not a monomial matrix");
    }
    return d;
}

}  // namespace cusplab
