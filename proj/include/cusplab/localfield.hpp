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

#include <climits>
#include <string>
#include <vector>

#include "cusplab/residue.hpp"

namespace cusplab {

/// Absolute precision marker for elements known exactly (Laurent polynomials).
inline constexpr long kExact = LONG_MAX / 4;

/// Relative precision used when inverting an exact non-monomial element.
long default_relative_precision();
void set_default_relative_precision(long r);

/// Truncated Laurent series over F_q, uniformizer t. The element is known
/// modulo t^prec; prec == kExact marks an exact Laurent polynomial.
class LSeries {
public:
    LSeries() = default;
    /// exact zero
    explicit LSeries(const ResidueField& k) : k_(&k) {}

    static LSeries zero(const ResidueField& k, long prec = kExact);
    static LSeries constant(const ResidueField& k, Fq c);
    static LSeries integer(const ResidueField& k, long n);
    static LSeries monomial(const ResidueField& k, Fq c, long e);
    /// sum_i coeffs[i] t^(v+i), known modulo t^prec
    static LSeries from_coeffs(const ResidueField& k, long v, std::vector<Fq> coeffs, long prec = kExact);

    const ResidueField& field() const { return *k_; }
    long prec() const { return prec_; }
    bool is_exact() const { return prec_ >= kExact; }
    /// zero to the tracked precision (or exactly zero)
    bool is_zero() const { return c_.empty(); }
    bool is_exact_zero() const { return c_.empty() && is_exact(); }
    /// throws Precision for zero-to-precision input
    long val() const;
    /// val() for nonzero input, prec() for zero-to-precision
    long val_lower_bound() const { return c_.empty() ? prec_ : v_; }
    bool is_unit() const { return !is_zero() && v_ == 0; }
    /// coefficient of t^e; throws Precision when e >= prec()
    Fq residue_at(long e) const;
    /// first stored exponent and coefficients (leading one nonzero)
    long start() const { return v_; }
    const std::vector<Fq>& coeffs() const { return c_; }

    LSeries operator+(const LSeries& o) const;
    LSeries operator-(const LSeries& o) const;
    LSeries operator-() const;
    LSeries operator*(const LSeries& o) const;
    LSeries& operator+=(const LSeries& o) { return *this = *this + o; }
    LSeries& operator-=(const LSeries& o) { return *this = *this - o; }
    LSeries& operator*=(const LSeries& o) { return *this = *this * o; }
    LSeries scaled(Fq c) const;
    /// multiplication by t^e
    LSeries shifted(long e) const;
    /// relprec only matters for exact non-monomial input
    LSeries inv(long relprec = 0) const;
    LSeries pow(long e, long relprec = 0) const;
    /// drop information beyond t^p (p may only lower the precision)
    LSeries truncated(long p) const;

    /// a - b is zero to the combined precision
    bool equals(const LSeries& o) const { return (*this - o).is_zero(); }

    std::string render() const;

private:
    void normalize();
    void check_same(const LSeries& o) const;

    const ResidueField* k_ = nullptr;
    long v_ = 0;
    std::vector<Fq> c_;
    long prec_ = kExact;
};

/// saturating arithmetic on precisions
inline long prec_add(long a, long b) {
    if (a >= kExact || b >= kExact) return kExact;
    return a + b;
}

}  // namespace cusplab
