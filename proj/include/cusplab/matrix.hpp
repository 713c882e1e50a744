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
#include <string>
#include <vector>

#include "cusplab/localfield.hpp"

namespace cusplab {

/// Dense matrix of truncated Laurent series.
class MatLS {
public:
    MatLS() = default;
    MatLS(const ResidueField& k, std::size_t rows, std::size_t cols);

    static MatLS zero(const ResidueField& k, std::size_t rows, std::size_t cols) { return MatLS(k, rows, cols); }
    static MatLS identity(const ResidueField& k, std::size_t n);
    static MatLS scalar(const ResidueField& k, std::size_t n, const LSeries& s);
    static MatLS diag(const std::vector<LSeries>& d);
    /// 3x3 block matrix; all blocks in one row share a height, etc.
    static MatLS blocks3(const MatLS (&b)[3][3]);

    const ResidueField& field() const { return *k_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    LSeries& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
    const LSeries& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

    MatLS operator+(const MatLS& o) const;
    MatLS operator-(const MatLS& o) const;
    MatLS operator-() const;
    MatLS operator*(const MatLS& o) const;
    MatLS operator*(const LSeries& s) const;

    MatLS transpose() const;
    /// transpose along the antidiagonal: (M^tau)_{ij} = M_{n+1-j, n+1-i}
    MatLS anti_transpose() const;
    MatLS block(std::size_t i0, std::size_t j0, std::size_t rows, std::size_t cols) const;
    void set_block(std::size_t i0, std::size_t j0, const MatLS& b);

    /// Gauss-Jordan with minimal-valuation pivots; throws Domain if singular
    /// to precision. relprec is passed to series inversion of exact pivots.
    MatLS inverse(long relprec = 0) const;
    LSeries det(long relprec = 0) const;
    MatLS pow(long e, long relprec = 0) const;

    bool is_zero() const;
    /// every entry of this - o is zero to precision
    bool equals(const MatLS& o) const { return (*this - o).is_zero(); }
    /// smallest absolute precision among the entries
    long min_prec() const;
    bool is_exact() const { return min_prec() >= kExact; }

    std::string render() const;

private:
    void check_dims(const MatLS& o) const;

    const ResidueField* k_ = nullptr;
    std::size_t r_ = 0, c_ = 0;
    std::vector<LSeries> e_;
};

/// A matrix with exactly one nonzero entry per row and column, each a
/// monomial: row i has c_i t^{val_i} in column perm[i].
struct MonomialData {
    std::vector<std::size_t> perm;
    std::vector<long> val;
};
/// throws InvalidArgument unless M is an exact monomial matrix
MonomialData monomial_data(const MatLS& m);

}  // namespace cusplab
