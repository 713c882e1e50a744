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

#include "cusplab/exactnum.hpp"

namespace cusplab {

/// Element of a residue field, encoded as an integer in [0, q): the base-p
/// digits are the coefficients over the defining polynomial's root.
struct Fq {
    std::uint32_t v = 0;
    bool operator==(const Fq& o) const { return v == o.v; }
    bool operator!=(const Fq& o) const { return v != o.v; }
};

using Sign = int;  // +1 or -1

/// Finite field F_q, q odd. Instances are interned and never destroyed, so
/// raw pointers to them stay valid for the life of the process.
class ResidueField {
public:
    static const ResidueField& prime(int p);
    /// F_p[x]/(modulus), modulus monic of degree f, low coefficient first
    static const ResidueField& extension(int p, const std::vector<int>& modulus);
    /// prime fields only; extensions need an explicit modulus
    static const ResidueField& of_order(int q);

    int p() const { return p_; }
    int degree() const { return f_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Fq zero() const { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    Fq from_int(long n) const;
    /// all elements in the fixed enumeration order 0, 1, ..., q-1
    std::vector<Fq> elements() const;
    std::vector<Fq> units() const;

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;
    Fq pow(Fq a, long e) const;
    bool is_zero(Fq a) const { return a.v == 0; }

    /// absolute trace to F_p, as an integer in [0, p)
    int trace(Fq a) const;
    /// x^((q-1)/2); throws Domain on 0
    Sign delta(Fq a) const;
    /// smallest non-square in the enumeration order
    Fq smallest_nonsquare() const;

    std::string render(Fq a) const;

private:
    ResidueField(int p, std::vector<int> modulus);

    int p_, f_, q_;
    std::vector<int> modulus_;
    // extension fields: discrete log tables over a primitive element
    std::vector<std::uint32_t> exp_, log_;
    std::vector<int> trace_;
};

/// signature of y -> x*y on F_q
Sign zolotarev(const ResidueField& k, Fq x);

/// exponent Tr(a*x) mod p of psi(x, a) = z^Tr(a x)
int psi_exponent(const ResidueField& k, Fq x, Fq a);
CycNum psi(const ResidueField& k, Fq x, Fq a);

CycNum gauss_sum(const ResidueField& k, Fq a);
inline CycNum gauss_sum(const ResidueField& k) { return gauss_sum(k, k.one()); }
FourthRoot xi(const ResidueField& k, Fq a);
inline FourthRoot xi(const ResidueField& k) { return xi(k, k.one()); }

/// z^k for k in [0, p), as ready-made values
CycNum zeta(const ResidueField& k, long e);

bool is_prime(long n);
bool is_odd_prime_power(long q, int* p = nullptr, int* f = nullptr);

}  // namespace cusplab
