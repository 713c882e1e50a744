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

#include "cusplab/localfield.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "cusplab/error.hpp"

namespace cusplab {

namespace {
std::atomic<long> g_relprec{96};
}

long default_relative_precision() { return g_relprec.load(); }

void set_default_relative_precision(long r) {
    if (r < 1) fail(ErrorKind::InvalidArgument, "relative precision must be positive");
    g_relprec.store(r);
}

LSeries LSeries::zero(const ResidueField& k, long prec) {
    LSeries a(k);
    a.prec_ = prec;
    return a;
}

LSeries LSeries::constant(const ResidueField& k, Fq c) { return monomial(k, c, 0); }

LSeries LSeries::integer(const ResidueField& k, long n) { return constant(k, k.from_int(n)); }

LSeries LSeries::monomial(const ResidueField& k, Fq c, long e) {
    LSeries a(k);
    if (c.v != 0) {
        a.v_ = e;
        a.c_ = {c};
    }
    return a;
}

LSeries LSeries::from_coeffs(const ResidueField& k, long v, std::vector<Fq> coeffs, long prec) {
    LSeries a(k);
    a.v_ = v;
    a.c_ = std::move(coeffs);
    a.prec_ = prec;
    a.normalize();
    return a;
}

// strip leading zeros, drop coefficients at or beyond prec, trim the tail
void LSeries::normalize() {
    if (prec_ < kExact) {
        const long keep = prec_ - v_;
        if (keep <= 0) c_.clear();
        else if (static_cast<long>(c_.size()) > keep) c_.resize(keep);
    }
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].v == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        v_ = 0;
        return;
    }
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        v_ += static_cast<long>(lead);
    }
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

void LSeries::check_same(const LSeries& o) const {
    if (k_ != o.k_) fail(ErrorKind::InvalidArgument, "base field mismatch");
}

long LSeries::val() const {
    if (c_.empty()) fail(ErrorKind::Precision, "valuation of zero-to-precision element");
    return v_;
}

Fq LSeries::residue_at(long e) const {
    if (e >= prec_) fail(ErrorKind::Precision, "coefficient beyond precision");
    if (c_.empty() || e < v_ || e >= v_ + static_cast<long>(c_.size())) return Fq{0};
    return c_[e - v_];
}

LSeries LSeries::operator+(const LSeries& o) const {
    check_same(o);
    const long prec = std::min(prec_, o.prec_);
    if (c_.empty() && prec == prec_) return o.truncated(prec);
    if (o.c_.empty()) return truncated(prec);
    if (c_.empty()) return o.truncated(prec);
    const long lo = std::min(v_, o.v_);
    long hi = std::max(v_ + static_cast<long>(c_.size()), o.v_ + static_cast<long>(o.c_.size()));
    if (prec < kExact) hi = std::min(hi, prec);
    LSeries r(*k_);
    r.prec_ = prec;
    r.v_ = lo;
    if (hi <= lo) {
        r.c_.clear();
        r.v_ = 0;
        return r;
    }
    r.c_.assign(hi - lo, Fq{0});
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const long e = v_ + static_cast<long>(i);
        if (e < hi) r.c_[e - lo] = c_[i];
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        const long e = o.v_ + static_cast<long>(i);
        if (e < hi) r.c_[e - lo] = k_->add(r.c_[e - lo], o.c_[i]);
    }
    r.normalize();
    return r;
}

LSeries LSeries::operator-() const {
    LSeries r = *this;
    for (auto& c : r.c_) c = k_->neg(c);
    return r;
}

LSeries LSeries::operator-(const LSeries& o) const { return *this + (-o); }

LSeries LSeries::operator*(const LSeries& o) const {
    check_same(o);
    const long prec = std::min(prec_add(prec_, o.val_lower_bound()), prec_add(o.prec_, val_lower_bound()));
    LSeries r(*k_);
    r.prec_ = prec;
    if (c_.empty() || o.c_.empty()) return r;
    r.v_ = v_ + o.v_;
    long len = static_cast<long>(c_.size() + o.c_.size()) - 1;
    if (prec < kExact) len = std::min(len, prec - r.v_);
    if (len <= 0) {
        r.v_ = 0;
        return r;
    }
    r.c_.assign(len, Fq{0});
    const ResidueField& k = *k_;
    if (k.degree() == 1) {
        // accumulate in 64 bits, reduce once per output coefficient
        const std::uint64_t p = static_cast<std::uint64_t>(k.p());
        for (long n = 0; n < len; ++n) {
            std::uint64_t acc = 0;
            const long ilo = std::max(0L, n - static_cast<long>(o.c_.size()) + 1);
            const long ihi = std::min(n, static_cast<long>(c_.size()) - 1);
            for (long i = ilo; i <= ihi; ++i) acc += static_cast<std::uint64_t>(c_[i].v) * o.c_[n - i].v;
            r.c_[n].v = static_cast<std::uint32_t>(acc % p);
        }
    } else {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].v == 0) continue;
            for (std::size_t j = 0; j < o.c_.size() && static_cast<long>(i + j) < len; ++j)
                r.c_[i + j] = k.add(r.c_[i + j], k.mul(c_[i], o.c_[j]));
        }
    }
    r.normalize();
    return r;
}

LSeries LSeries::scaled(Fq c) const {
    if (c.v == 0) return zero(*k_);
    LSeries r = *this;
    for (auto& x : r.c_) x = k_->mul(x, c);
    return r;
}

LSeries LSeries::shifted(long e) const {
    LSeries r = *this;
    if (!r.c_.empty()) r.v_ += e;
    if (r.prec_ < kExact) r.prec_ += e;
    return r;
}

LSeries LSeries::inv(long relprec) const {
    if (c_.empty() && is_exact()) fail(ErrorKind::Domain, "inverse of zero");
    if (c_.empty()) fail(ErrorKind::Precision, "inverse of zero-to-precision element");
    const ResidueField& k = *k_;
    const Fq u0inv = k.inv(c_[0]);
    if (is_exact() && c_.size() == 1) return monomial(k, u0inv, -v_);
    long r = is_exact() ? (relprec > 0 ? relprec : default_relative_precision()) : prec_ - v_;
    // unit part u = c_0 + c_1 t + ..., inverse w with sum_{i} u_i w_{n-i} = [n == 0]
    std::vector<Fq> w(r, Fq{0});
    w[0] = u0inv;
    for (long n = 1; n < r; ++n) {
        Fq acc{0};
        const long imax = std::min(n, static_cast<long>(c_.size()) - 1);
        for (long i = 1; i <= imax; ++i) acc = k.add(acc, k.mul(c_[i], w[n - i]));
        w[n] = k.neg(k.mul(acc, u0inv));
    }
    return from_coeffs(k, -v_, std::move(w), r - v_);
}

LSeries LSeries::pow(long e, long relprec) const {
    if (e < 0) return inv(relprec).pow(-e, relprec);
    LSeries result = integer(*k_, 1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

LSeries LSeries::truncated(long p) const {
    if (p >= prec_) return *this;
    LSeries r = *this;
    r.prec_ = p;
    r.normalize();
    return r;
}

std::string LSeries::render() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].v == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << k_->render(c_[i]) << "*t^" << (v_ + static_cast<long>(i));
    }
    if (!is_exact()) {
        if (!first) os << " + ";
        os << "O(t^" << prec_ << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

}  // namespace cusplab
