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

#include "cusplab/residue.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "cusplab/error.hpp"

namespace cusplab {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_odd_prime_power(long q, int* p, int* f) {
    if (q < 3 || q % 2 == 0) return false;
    long r = 3;
    while (q % r != 0) r += 2;
    if (!is_prime(r)) return false;
    int e = 0;
    long m = q;
    while (m % r == 0) {
        m /= r;
        ++e;
    }
    if (m != 1) return false;
    if (p) *p = static_cast<int>(r);
    if (f) *f = e;
    return true;
}

namespace {

using Poly = std::vector<int>;  // low coefficient first, mod p

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    // inverse of the leading coefficient of m
    int lead_inv = 1;
    while ((lead_inv * m.back()) % p != 1) ++lead_inv;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int c = (a.back() * lead_inv) % p;
        for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

bool irreducible(const Poly& m, int p) {
    const int f = static_cast<int>(m.size()) - 1;
    if (f < 1) return false;
    // trial division by every monic polynomial of degree 1..f/2
    for (int d = 1; 2 * d <= f; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            Poly g(d + 1);
            long t = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_mod(m, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

ResidueField::ResidueField(int p, std::vector<int> modulus)
    : p_(p), f_(static_cast<int>(modulus.size()) - 1), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < f_; ++i) q_ *= p_;
    trace_.assign(q_, 0);
    if (f_ == 1) {
        for (int x = 0; x < q_; ++x) trace_[x] = x;
        return;
    }
    // multiply polynomials digit-wise to build the log tables
    auto to_poly = [&](std::uint32_t v) {
        Poly a(f_);
        for (int i = 0; i < f_; ++i) {
            a[i] = static_cast<int>(v % p_);
            v /= p_;
        }
        return a;
    };
    auto from_poly = [&](const Poly& a) {
        std::uint32_t v = 0, base = 1;
        for (int i = 0; i < f_; ++i) {
            if (i < static_cast<int>(a.size())) v += static_cast<std::uint32_t>(a[i]) * base;
            base *= p_;
        }
        return v;
    };
    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
        const Poly pa = to_poly(a), pb = to_poly(b);
        Poly prod(2 * f_, 0);
        for (int i = 0; i < f_; ++i)
            for (int j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
        return from_poly(poly_mod(prod, modulus_, p_));
    };
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (std::uint32_t g = 2; g < static_cast<std::uint32_t>(q_); ++g) {
        std::uint32_t x = 1;
        int order = 0;
        do {
            exp_[order++] = x;
            x = slow_mul(x, g);
        } while (x != 1 && order < q_ - 1);
        if (order == q_ - 1 && x == 1) break;
        if (g + 1 == static_cast<std::uint32_t>(q_)) fail(ErrorKind::Domain, "no primitive element");
    }
    for (int i = 0; i < q_ - 1; ++i) log_[exp_[i]] = static_cast<std::uint32_t>(i);
    for (int x = 0; x < q_; ++x) {
        // Tr(x) = x + x^p + ... + x^(p^(f-1)) lies in the prime field
        Fq acc{0}, y{static_cast<std::uint32_t>(x)};
        for (int j = 0; j < f_; ++j) {
            acc = add(acc, y);
            y = pow(y, p_);
        }
        if (acc.v >= static_cast<std::uint32_t>(p_)) fail(ErrorKind::Domain, "trace outside prime field");
        trace_[x] = static_cast<int>(acc.v);
    }
}

namespace {
std::mutex registry_mutex;
std::map<std::pair<int, std::vector<int>>, std::unique_ptr<ResidueField>>& registry() {
    static std::map<std::pair<int, std::vector<int>>, std::unique_ptr<ResidueField>> r;
    return r;
}
}  // namespace

const ResidueField& ResidueField::prime(int p) {
    if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidArgument, "residue characteristic must be an odd prime");
    return extension(p, {0, 1});
}

const ResidueField& ResidueField::extension(int p, const std::vector<int>& modulus) {
    if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidArgument, "residue characteristic must be an odd prime");
    Poly m;
    for (int c : modulus) m.push_back(((c % p) + p) % p);
    trim(m);
    if (m.size() < 2 || m.back() != 1) fail(ErrorKind::InvalidArgument, "modulus must be monic of degree >= 1");
    if (!irreducible(m, p)) fail(ErrorKind::InvalidArgument, "modulus is reducible");
    long q = 1;
    for (std::size_t i = 1; i < m.size(); ++i) q *= p;
    if (q > (1L << 20)) fail(ErrorKind::InvalidArgument, "field too large");
    // every degree-1 modulus gives the same prime field
    if (m.size() == 2) m = {0, 1};
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& slot = registry()[{p, m}];
    if (!slot) slot.reset(new ResidueField(p, m));
    return *slot;
}

const ResidueField& ResidueField::of_order(int q) {
    if (!is_prime(q)) fail(ErrorKind::InvalidArgument, "q = " + std::to_string(q) + " needs an explicit modulus");
    return prime(q);
}

Fq ResidueField::from_int(long n) const {
    long r = n % p_;
    if (r < 0) r += p_;
    return Fq{static_cast<std::uint32_t>(r)};
}

std::vector<Fq> ResidueField::elements() const {
    std::vector<Fq> out(q_);
    for (int i = 0; i < q_; ++i) out[i].v = static_cast<std::uint32_t>(i);
    return out;
}

std::vector<Fq> ResidueField::units() const {
    std::vector<Fq> out(q_ - 1);
    for (int i = 1; i < q_; ++i) out[i - 1].v = static_cast<std::uint32_t>(i);
    return out;
}

Fq ResidueField::add(Fq a, Fq b) const {
    if (f_ == 1) {
        std::uint32_t s = a.v + b.v;
        return Fq{s >= static_cast<std::uint32_t>(p_) ? s - p_ : s};
    }
    std::uint32_t out = 0, base = 1, x = a.v, y = b.v;
    for (int i = 0; i < f_; ++i) {
        out += ((x % p_ + y % p_) % p_) * base;
        x /= p_;
        y /= p_;
        base *= p_;
    }
    return Fq{out};
}

Fq ResidueField::neg(Fq a) const {
    if (f_ == 1) return Fq{a.v == 0 ? 0 : p_ - a.v};
    std::uint32_t out = 0, base = 1, x = a.v;
    for (int i = 0; i < f_; ++i) {
        out += ((p_ - x % p_) % p_) * base;
        x /= p_;
        base *= p_;
    }
    return Fq{out};
}

Fq ResidueField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq ResidueField::mul(Fq a, Fq b) const {
    if (f_ == 1) return Fq{static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.v) * b.v) % p_)};
    if (a.v == 0 || b.v == 0) return Fq{0};
    return Fq{exp_[(log_[a.v] + log_[b.v]) % (q_ - 1)]};
}

Fq ResidueField::pow(Fq a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    Fq r = one(), b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Fq ResidueField::inv(Fq a) const {
    if (a.v == 0) fail(ErrorKind::Domain, "inverse of 0 in F_q");
    if (f_ == 1) return pow(a, p_ - 2);
    return Fq{exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
}

int ResidueField::trace(Fq a) const { return trace_[a.v]; }

Sign ResidueField::delta(Fq a) const {
    if (a.v == 0) fail(ErrorKind::Domain, "delta(0) is undefined");
    const Fq r = pow(a, (q_ - 1) / 2);
    if (r == one()) return 1;
    if (r == neg(one())) return -1;
    fail(ErrorKind::Domain, "x^((q-1)/2) is not +-1");
}

Fq ResidueField::smallest_nonsquare() const {
    for (Fq x : units())
        if (delta(x) < 0) return x;
    fail(ErrorKind::Domain, "no non-square");
}

std::string ResidueField::render(Fq a) const {
    if (f_ == 1) return std::to_string(a.v);
    std::ostringstream os;
    os << "(";
    std::uint32_t x = a.v;
    for (int i = 0; i < f_; ++i) {
        if (i) os << ",";
        os << (x % p_);
        x /= p_;
    }
    os << ")";
    return os.str();
}

Sign zolotarev(const ResidueField& k, Fq x) {
    if (k.is_zero(x)) fail(ErrorKind::Domain, "zolotarev(0) is undefined");
    // sign = (-1)^(q - number of cycles)
    std::vector<char> seen(k.q(), 0);
    int cycles = 0;
    for (Fq y : k.elements()) {
        if (seen[y.v]) continue;
        ++cycles;
        Fq z = y;
        while (!seen[z.v]) {
            seen[z.v] = 1;
            z = k.mul(x, z);
        }
    }
    return ((k.q() - cycles) % 2 == 0) ? 1 : -1;
}

int psi_exponent(const ResidueField& k, Fq x, Fq a) { return k.trace(k.mul(a, x)); }

CycNum zeta(const ResidueField& k, long e) { return CycNum::zeta_pow(k.p(), e); }

CycNum psi(const ResidueField& k, Fq x, Fq a) { return zeta(k, psi_exponent(k, x, a)); }

CycNum gauss_sum(const ResidueField& k, Fq a) {
    std::vector<std::int64_t> hist(k.p(), 0);
    for (Fq u : k.units()) hist[psi_exponent(k, u, a)] += k.delta(u);
    return CycNum::from_histogram(k.p(), hist);
}

FourthRoot xi(const ResidueField& k, Fq a) { return as_fourth_root(gauss_sum(k, a), mpq_class(k.q())); }

}  // namespace cusplab
