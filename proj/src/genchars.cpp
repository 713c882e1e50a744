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

#include "cusplab/genchars.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "cusplab/error.hpp"
#include "cusplab/lattices.hpp"
#include "cusplab/sympgroups.hpp"

namespace cusplab {

std::string AffGenChar::render() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < N(); ++i) os << (i ? ", " : "") << k->render(alpha[i]);
    os << "; " << k->render(alpha.back()) << ")";
    return os.str();
}

AffGenChar make_char(const ResidueField& k, const std::vector<Fq>& alpha) {
    require(alpha.size() >= 2, "affine generic character needs N >= 1");
    for (Fq a : alpha) require(!k.is_zero(a), "affine generic parameters must be units");
    return AffGenChar{&k, alpha};
}

AffGenChar from_beta(const ResidueField& k, std::size_t N) {
    require(N >= 1, "N must be positive");
    std::vector<Fq> a(N + 1, k.from_int(-2));
    a[N - 1] = k.from_int(-1);
    a[N] = k.one();
    return make_char(k, a);
}

AffGenChar from_psi_twist(const ResidueField& k, std::size_t N, Fq a) {
    return make_char(k, std::vector<Fq>(N + 1, a));
}

AffGenChar conj_by_torus(const AffGenChar& l, const std::vector<Fq>& d) {
    const ResidueField& k = *l.k;
    const std::size_t N = l.N();
    require(d.size() == N, "torus element has the wrong size");
    for (Fq x : d) require(!k.is_zero(x), "torus entries must be units");
    AffGenChar r = l;
    for (std::size_t i = 0; i + 1 < N; ++i) r.alpha[i] = k.mul(l.alpha[i], k.mul(d[i], k.inv(d[i + 1])));
    r.alpha[N - 1] = k.mul(l.alpha[N - 1], k.mul(d[N - 1], d[N - 1]));
    r.alpha[N] = k.mul(l.alpha[N], k.inv(k.mul(d[0], d[0])));
    return r;
}

OrbitInvariants orbit_invariants(const AffGenChar& l) {
    const ResidueField& k = *l.k;
    const std::size_t N = l.N();
    Fq p = k.one();
    for (std::size_t i = 0; i + 1 < N; ++i) p = k.mul(p, l.alpha[i]);
    p = k.mul(k.mul(p, p), k.mul(l.alpha[N - 1], l.alpha[N]));
    return OrbitInvariants{k.delta(l.alpha[N - 1]), k.delta(l.alpha[N]), p};
}

bool same_orbit(const AffGenChar& a, const AffGenChar& b) {
    require(a.k == b.k && a.N() == b.N(), "characters of different groups");
    const OrbitInvariants x = orbit_invariants(a), y = orbit_invariants(b);
    return x.alpha_N_class == y.alpha_N_class && x.alpha_2N_class == y.alpha_2N_class && x.product == y.product;
}

AffGenChar canonical(const AffGenChar& l) {
    const ResidueField& k = *l.k;
    const std::size_t N = l.N();
    const OrbitInvariants inv = orbit_invariants(l);
    std::vector<Fq> a(N + 1, k.from_int(-1));
    const Fq minus_one = k.from_int(-1);
    // -alpha_N must land in the square class of alpha_N
    a[N - 1] = k.delta(minus_one) * inv.alpha_N_class > 0 ? minus_one : k.neg(k.smallest_nonsquare());
    a[N] = k.mul(inv.product, k.inv(a[N - 1]));
    return make_char(k, a);
}

std::vector<AffGenChar> canonical_representatives(const ResidueField& k, std::size_t N) {
    std::vector<AffGenChar> out;
    const Fq minus_one = k.from_int(-1);
    for (Fq aN : {minus_one, k.neg(k.smallest_nonsquare())})
        for (Fq a2N : k.units()) {
            std::vector<Fq> a(N + 1, minus_one);
            a[N - 1] = aN;
            a[N] = a2N;
            out.push_back(make_char(k, a));
        }
    std::sort(out.begin(), out.end(), [](const AffGenChar& x, const AffGenChar& y) {
        return std::make_pair(x.alpha[x.N() - 1].v, x.alpha.back().v) <
               std::make_pair(y.alpha[y.N() - 1].v, y.alpha.back().v);
    });
    return out;
}

std::vector<AffGenChar> all_characters(const ResidueField& k, std::size_t N) {
    const std::size_t u = static_cast<std::size_t>(k.q() - 1);
    std::size_t total = 1;
    for (std::size_t i = 0; i <= N; ++i) total *= u;
    std::vector<AffGenChar> out;
    out.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<Fq> a(N + 1);
        std::size_t r = idx;
        for (std::size_t i = N + 1; i-- > 0;) {
            a[i].v = static_cast<std::uint32_t>(1 + r % u);
            r /= u;
        }
        out.push_back(AffGenChar{&k, std::move(a)});
    }
    return out;
}

std::size_t character_index(const AffGenChar& l) {
    const std::size_t u = static_cast<std::size_t>(l.k->q() - 1);
    std::size_t idx = 0;
    for (Fq a : l.alpha) idx = idx * u + (a.v - 1);
    return idx;
}

Fq primitive_element(const ResidueField& k) {
    const long n = k.q() - 1;
    for (Fq g : k.units()) {
        long ord = 1;
        Fq x = g;
        while (x != k.one()) {
            x = k.mul(x, g);
            ++ord;
        }
        if (ord == n) return g;
    }
    fail(ErrorKind::Domain, "no primitive element");
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

OrbitCensus orbit_census(const ResidueField& k, std::size_t N, bool all_pairs) {
    const std::vector<AffGenChar> chars = all_characters(k, N);
    const Fq g = primitive_element(k);
    UnionFind uf(chars.size());
    for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::size_t j = 0; j < N; ++j) {
            std::vector<Fq> d(N, k.one());
            d[j] = g;
            uf.join(i, character_index(conj_by_torus(chars[i], d)));
        }

    OrbitCensus c;
    c.tuples = chars.size();
    std::map<std::size_t, std::size_t> canon_of_root;  // root -> index of canonical rep
    std::map<std::size_t, std::size_t> root_of_canon;
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const std::size_t r = uf.find(i);
        if (r == i) ++c.orbits;
        if (!same_orbit(chars[i], chars[r])) c.criteria_match = false;
        const AffGenChar can = canonical(chars[i]);
        if (!same_orbit(can, chars[i])) c.criteria_match = false;
        const std::size_t ci = character_index(can);
        if (uf.find(ci) != r) c.canonical_match = false;
        auto [it, fresh] = canon_of_root.emplace(r, ci);
        if (!fresh && it->second != ci) c.canonical_match = false;
        auto [jt, fresh2] = root_of_canon.emplace(ci, r);
        if (!fresh2 && jt->second != r) c.canonical_match = false;
    }
    if (all_pairs) {
        for (std::size_t i = 0; i < chars.size(); ++i)
            for (std::size_t j = 0; j < chars.size(); ++j) {
                ++c.pairs_checked;
                if ((uf.find(i) == uf.find(j)) != same_orbit(chars[i], chars[j])) c.criteria_match = false;
            }
    }
    return c;
}

std::size_t orbit_count(const ResidueField& k, std::size_t N) {
    const OrbitCensus c = orbit_census(k, N, false);
    if (!c.criteria_match || !c.canonical_match)
        fail(ErrorKind::Identity, "orbit criteria disagree with the brute-force orbits");
    return c.orbits;
}

std::size_t cuspidal_count(const ResidueField& k, std::size_t N) { return 2 * orbit_count(k, N); }

AffGenChar gsp_twist(const AffGenChar& l) {
    const ResidueField& k = *l.k;
    const Fq eps = k.smallest_nonsquare();
    AffGenChar r = l;
    r.alpha[l.N() - 1] = k.mul(l.alpha[l.N() - 1], eps);
    r.alpha[l.N()] = k.mul(l.alpha[l.N()], k.inv(eps));
    return r;
}

MatLS cayley(const MatLS& X, long relprec) {
    const ResidueField& k = X.field();
    const LSeries half = LSeries::constant(k, k.inv(k.from_int(2)));
    const MatLS I = MatLS::identity(k, X.rows());
    const MatLS h = X * half;
    return (I + h) * (I - h).inverse(relprec);
}

MatLS coordinate_element(const ResidueField& k, std::size_t N, std::size_t j, Fq u) {
    require(N >= 1 && j <= N, "coordinate index out of range");
    const std::size_t n = 2 * N;
    MatLS Y(k, n, n);
    if (j < N)
        Y(j, j + 1) = LSeries::constant(k, u);
    else
        Y(n - 1, 0) = LSeries::monomial(k, u, 1);
    const MatLS aY = adjoint_sp(Y, form_h(n));
    // Y is already in the Lie algebra when it is its own mirror
    const MatLS X = (aY + Y).is_zero() ? Y : Y - aY;
    return cayley(X);
}

std::vector<Fq> coordinates(const MatLS& x) {
    require(x.square() && x.rows() % 2 == 0, "coordinates need an even square matrix");
    const std::size_t n = x.rows(), N = n / 2;
    std::vector<Fq> c(N + 1);
    for (std::size_t j = 0; j < N; ++j) c[j] = x(j, j + 1).residue_at(0);
    c[N] = x(n - 1, 0).residue_at(1);
    return c;
}

Fq character_argument(const AffGenChar& l, const MatLS& x) {
    const ResidueField& k = *l.k;
    const std::vector<Fq> c = coordinates(x);
    require(c.size() == l.alpha.size(), "character and element have different N");
    Fq s = k.zero();
    for (std::size_t j = 0; j < c.size(); ++j) s = k.add(s, k.mul(l.alpha[j], c[j]));
    return s;
}

}  // namespace cusplab
