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

#include "cusplab/exactnum.hpp"

#include <cmath>
#include <sstream>

#include <mpfr.h>

#include "cusplab/error.hpp"

namespace cusplab {

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

CycNum::CycNum(int p) : p_(p), c_(p - 1) {
    if (!is_odd_prime(p)) fail(ErrorKind::InvalidArgument, "conductor must be an odd prime");
}

CycNum CycNum::rational(int p, const mpq_class& c) {
    CycNum x(p);
    x.c_[0] = c;
    x.c_[0].canonicalize();
    return x;
}

CycNum CycNum::zeta_pow(int p, long k) {
    std::vector<mpq_class> full(p);
    full[mod(k, p)] = 1;
    return reduce_full(p, std::move(full));
}

CycNum CycNum::from_histogram(int p, const std::vector<std::int64_t>& counts) {
    std::vector<mpq_class> full(p);
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] == 0) continue;
        full[k % p] += mpq_class(mpz_class(std::to_string(counts[k])));
    }
    return reduce_full(p, std::move(full));
}

// z^(p-1) = -(1 + z + ... + z^(p-2))
CycNum CycNum::reduce_full(int p, std::vector<mpq_class>&& full) {
    CycNum x(p);
    const mpq_class top = full[p - 1];
    for (int k = 0; k < p - 1; ++k) {
        x.c_[k] = full[k] - top;
        x.c_[k].canonicalize();
    }
    return x;
}

void CycNum::check_same(const CycNum& o) const {
    if (p_ != o.p_) fail(ErrorKind::InvalidArgument, "conductor mismatch");
}

bool CycNum::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

mpq_class CycNum::as_rational() const {
    if (!is_rational()) fail(ErrorKind::Domain, "not a rational element: " + render());
    return c_.empty() ? mpq_class(0) : c_[0];
}

CycNum CycNum::operator+(const CycNum& o) const {
    CycNum r = *this;
    r += o;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    check_same(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
    check_same(o);
    std::vector<mpq_class> full(p_);
    for (int i = 0; i < p_ - 1; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < p_ - 1; ++j) {
            if (o.c_[j] == 0) continue;
            full[(i + j) % p_] += c_[i] * o.c_[j];
        }
    }
    return reduce_full(p_, std::move(full));
}

CycNum CycNum::operator*(const mpq_class& s) const {
    mpq_class f = s;
    f.canonicalize();
    CycNum r = *this;
    for (auto& v : r.c_) v *= f;
    return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    *this = *this * o;
    return *this;
}

bool CycNum::operator==(const CycNum& o) const {
    return p_ == o.p_ && c_ == o.c_;
}

CycNum CycNum::galois(long k) const {
    if (mod(k, p_) == 0) fail(ErrorKind::InvalidArgument, "galois exponent divisible by p");
    std::vector<mpq_class> full(p_);
    for (int i = 0; i < p_ - 1; ++i) full[mod(static_cast<long>(i) * k, p_)] += c_[i];
    return reduce_full(p_, std::move(full));
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum result = rational(p_, 1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

// 1/a = prod_{k != 1} sigma_k(a) / N(a)
CycNum CycNum::inverse() const {
    if (is_zero()) fail(ErrorKind::Domain, "inverse of zero");
    CycNum others = rational(p_, 1);
    for (int k = 2; k < p_; ++k) others *= galois(k);
    const mpq_class norm = (*this * others).as_rational();
    return others * mpq_class(1 / norm);
}

std::string CycNum::render() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k) os << " + ";
        os << c_[k].get_str();
        if (k == 1) os << "*z";
        if (k > 1) os << "*z^" << k;
    }
    return os.str();
}

mpq_class abs_squared(const CycNum& a) {
    const CycNum n = a * a.conj();
    if (!n.is_rational()) fail(ErrorKind::Domain, "a*conj(a) is not rational");
    return n.as_rational();
}

// Error budget: every MPFR call is correctly rounded (relative 2^-bits).
// Angles are below 2*pi, so each cos/sin value is off by at most
// 2^(5-bits); coefficient conversion, products and the running sum add a
// few ulps of the running magnitude each. The radius below covers all of it
// with margin.
Enclosure enclose(const CycNum& a, long bits) {
    const int p = a.conductor();
    mpfr_t pi2, ang, cs, sn, coef, term, re, im;
    for (auto* v : {&pi2, &ang, &cs, &sn, &coef, &term, &re, &im}) mpfr_init2(*v, bits);
    mpfr_const_pi(pi2, MPFR_RNDN);
    mpfr_mul_ui(pi2, pi2, 2, MPFR_RNDN);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    mpq_class abs_sum = 0;
    for (int k = 0; k < p - 1; ++k) {
        const mpq_class& c = a.coeff(k);
        if (c == 0) continue;
        abs_sum += abs(c);
        mpfr_set_q(coef, c.get_mpq_t(), MPFR_RNDN);
        mpfr_mul_ui(ang, pi2, k, MPFR_RNDN);
        mpfr_div_ui(ang, ang, p, MPFR_RNDN);
        mpfr_sin_cos(sn, cs, ang, MPFR_RNDN);
        mpfr_mul(term, coef, cs, MPFR_RNDN);
        mpfr_add(re, re, term, MPFR_RNDN);
        mpfr_mul(term, coef, sn, MPFR_RNDN);
        mpfr_add(im, im, term, MPFR_RNDN);
    }
    Enclosure e;
    e.bits = bits;
    e.re = mpfr_get_d(re, MPFR_RNDN);
    e.im = mpfr_get_d(im, MPFR_RNDN);
    const double s = abs_sum.get_d() + 1.0;
    e.radius = s * static_cast<double>(p + 64) * std::ldexp(1.0, static_cast<int>(8 - bits));
    // the double conversion of the centre adds half an ulp of a double
    e.radius += 1e-15 * (std::fabs(e.re) + std::fabs(e.im));
    for (auto* v : {&pi2, &ang, &cs, &sn, &coef, &term, &re, &im}) mpfr_clear(*v);
    return e;
}

namespace {

template <class Pick>
int certified_sign(const CycNum& a, Pick pick) {
    for (long bits = 64; bits <= (1L << 16); bits *= 2) {
        const Enclosure e = enclose(a, bits);
        const double v = pick(e);
        if (std::fabs(v) > e.radius) return v > 0 ? 1 : -1;
        // beyond double range the centre can no longer separate from 0
        if (bits >= 1000) break;
    }
    fail(ErrorKind::Precision, "sign not decided: " + a.render());
}

}  // namespace

int certified_sign_real(const CycNum& a) {
    if (a.is_zero()) fail(ErrorKind::Domain, "sign of zero");
    if (a != a.conj()) fail(ErrorKind::Domain, "not real: " + a.render());
    if (a.is_rational()) return sgn(a.as_rational());
    return certified_sign(a, [](const Enclosure& e) { return e.re; });
}

int certified_sign_imag(const CycNum& a) {
    if (a.is_zero()) fail(ErrorKind::Domain, "sign of zero");
    if (a != -a.conj()) fail(ErrorKind::Domain, "not purely imaginary: " + a.render());
    return certified_sign(a, [](const Enclosure& e) { return e.im; });
}

bool is_positive_real(const CycNum& a) {
    if (a.is_zero()) fail(ErrorKind::Domain, "is_positive_real of zero");
    if (a != a.conj()) return false;
    return certified_sign_real(a) > 0;
}

// a/b > 0  <=>  a*conj(b) > 0, since b*conj(b) > 0
bool ray_equiv(const CycNum& a, const CycNum& b) {
    if (a.is_zero() || b.is_zero()) fail(ErrorKind::Domain, "ray class of zero");
    return is_positive_real(a * b.conj());
}

int FourthRoot::sign() const {
    if (!is_real()) fail(ErrorKind::Domain, "fourth root is not real");
    return e_ == 0 ? 1 : -1;
}

std::string FourthRoot::render() const {
    static const char* names[] = {"1", "i", "-1", "-i"};
    return names[e_];
}

std::optional<FourthRoot> FourthRoot::parse(const std::string& s) {
    for (int e = 0; e < 4; ++e)
        if (FourthRoot(e).render() == s) return FourthRoot(e);
    if (s == "+1") return FourthRoot(0);
    if (s == "+i") return FourthRoot(1);
    return std::nullopt;
}

FourthRoot as_fourth_root(const CycNum& a, const mpq_class& modulus_sq) {
    if (modulus_sq <= 0) fail(ErrorKind::InvalidArgument, "modulus must be positive");
    if (abs_squared(a) != modulus_sq) fail(ErrorKind::Domain, "modulus mismatch");
    const CycNum sq = a * a;
    const int p = a.conductor();
    if (sq == CycNum::rational(p, modulus_sq))
        return FourthRoot::from_sign(certified_sign_real(a));
    if (sq == CycNum::rational(p, -modulus_sq))
        return FourthRoot(certified_sign_imag(a) > 0 ? 1 : 3);
    fail(ErrorKind::Domain, "square is not +-modulus");
}

RayClass::RayClass(CycNum rep) : rep_(std::move(rep)) {
    if (rep_.is_zero()) fail(ErrorKind::Domain, "ray class of zero");
}

// i is represented by z - z^-1 = 2i sin(2 pi/p)
RayClass RayClass::of_fourth_root(int p, FourthRoot r) {
    CycNum base = r.is_real() ? CycNum::rational(p, 1)
                              : CycNum::zeta_pow(p, 1) - CycNum::zeta_pow(p, -1);
    if (r.exponent() >= 2) base = -base;
    return RayClass(base);
}

std::optional<FourthRoot> RayClass::fourth_root() const {
    const CycNum c = rep_.conj();
    if (rep_ == c) return FourthRoot::from_sign(certified_sign_real(rep_));
    if (rep_ == -c) return FourthRoot(certified_sign_imag(rep_) > 0 ? 1 : 3);
    return std::nullopt;
}

std::string RayClass::render() const {
    if (auto r = fourth_root()) return r->render();
    return "ray(" + rep_.render() + ")";
}

}  // namespace cusplab
