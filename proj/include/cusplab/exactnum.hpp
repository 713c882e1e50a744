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
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cusplab {

/// Element of Q(zeta_p) in the power basis 1, z, ..., z^(p-2).
class CycNum {
public:
    CycNum() = default;
    explicit CycNum(int p);

    static CycNum rational(int p, const mpq_class& c);
    static CycNum zeta_pow(int p, long k);
    /// sum_k counts[k] * z^k, counts indexed by exponent mod p
    static CycNum from_histogram(int p, const std::vector<std::int64_t>& counts);

    int conductor() const { return p_; }
    /// coefficient of z^k for k in [0, p-2]
    const mpq_class& coeff(int k) const { return c_.at(k); }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// the constant coefficient; throws unless is_rational()
    mpq_class as_rational() const;

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator-() const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator*(const mpq_class& s) const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    /// z -> z^k, k prime to p
    CycNum galois(long k) const;
    CycNum conj() const { return galois(p_ - 1); }
    CycNum pow(long e) const;
    CycNum inverse() const;

    std::string render() const;

private:
    void check_same(const CycNum& o) const;
    static CycNum reduce_full(int p, std::vector<mpq_class>&& full);

    int p_ = 0;
    std::vector<mpq_class> c_;
};

/// rational a*conj(a); throws Domain when the product is not rational
mpq_class abs_squared(const CycNum& a);

/// sign (+1/-1) of a real nonzero number under z -> exp(2 pi i/p)
int certified_sign_real(const CycNum& a);
/// sign of the imaginary part of a purely imaginary nonzero number
int certified_sign_imag(const CycNum& a);

bool is_positive_real(const CycNum& a);
bool ray_equiv(const CycNum& a, const CycNum& b);

/// Numeric enclosure used by the sign decisions; exposed for tests.
struct Enclosure {
    double re = 0, im = 0;   // rounded centres
    double radius = 0;       // bound on |error| of each component
    long bits = 0;
};
Enclosure enclose(const CycNum& a, long bits);

class FourthRoot {
public:
    FourthRoot() = default;
    explicit FourthRoot(int exponent) : e_(((exponent % 4) + 4) % 4) {}
    static FourthRoot from_sign(int s) { return FourthRoot(s > 0 ? 0 : 2); }
    static std::optional<FourthRoot> parse(const std::string& s);

    int exponent() const { return e_; }
    FourthRoot operator*(FourthRoot o) const { return FourthRoot(e_ + o.e_); }
    FourthRoot inverse() const { return FourthRoot(-e_); }
    FourthRoot square() const { return FourthRoot(2 * e_); }
    bool is_real() const { return e_ % 2 == 0; }
    /// +1/-1 for real values; throws otherwise
    int sign() const;
    bool operator==(FourthRoot o) const { return e_ == o.e_; }
    bool operator!=(FourthRoot o) const { return e_ != o.e_; }
    std::string render() const;

private:
    int e_ = 0;
};

/// r with a = r * sqrt(modulus_sq)
FourthRoot as_fourth_root(const CycNum& a, const mpq_class& modulus_sq);

/// Nonzero number up to multiplication by positive reals.
class RayClass {
public:
    RayClass() = default;
    explicit RayClass(CycNum rep);
    static RayClass of_fourth_root(int p, FourthRoot r);

    const CycNum& rep() const { return rep_; }
    RayClass operator*(const RayClass& o) const { return RayClass(rep_ * o.rep_); }
    RayClass operator-() const { return RayClass(-rep_); }
    /// the class of 1/a is the class of conj(a)
    RayClass inverse() const { return RayClass(rep_.conj()); }
    bool operator==(const RayClass& o) const { return ray_equiv(rep_, o.rep_); }
    bool operator!=(const RayClass& o) const { return !(*this == o); }

    /// i^e when the class contains one, else nullopt
    std::optional<FourthRoot> fourth_root() const;
    std::string render() const;

private:
    CycNum rep_;
};

}  // namespace cusplab
