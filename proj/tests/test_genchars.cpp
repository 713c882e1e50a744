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

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "cusplab/error.hpp"
#include "cusplab/genchars.hpp"
#include "cusplab/sympgroups.hpp"

using namespace cusplab;

namespace {

// every element of the torus (k^x)^N
std::vector<std::vector<Fq>> torus(const ResidueField& k, std::size_t N) {
    std::vector<std::vector<Fq>> out{{}};
    for (std::size_t i = 0; i < N; ++i) {
        std::vector<std::vector<Fq>> next;
        for (const auto& d : out)
            for (Fq u : k.units()) {
                auto e = d;
                e.push_back(u);
                next.push_back(e);
            }
        out = next;
    }
    return out;
}

// orbit label of each character, from the full torus action
std::map<std::size_t, std::size_t> full_orbits(const ResidueField& k, std::size_t N, std::size_t* count) {
    std::map<std::size_t, std::size_t> label;
    const auto T = torus(k, N);
    *count = 0;
    for (const auto& a : all_characters(k, N)) {
        if (label.count(character_index(a))) continue;
        for (const auto& d : T) label[character_index(conj_by_torus(a, d))] = *count;
        ++*count;
    }
    return label;
}

MatLS torus_matrix(const ResidueField& k, const std::vector<Fq>& d) {
    const std::size_t N = d.size();
    std::vector<LSeries> e(2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        e[i] = LSeries::constant(k, d[i]);
        e[2 * N - 1 - i] = LSeries::constant(k, k.inv(d[i]));
    }
    return MatLS::diag(e);
}

}  // namespace

TEST(Orbits, CriteriaAgreeWithFullTorusAction) {
    for (auto [q, N] : std::vector<std::pair<int, std::size_t>>{{3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}) {
        const ResidueField& k = ResidueField::prime(q);
        std::size_t count = 0;
        const auto label = full_orbits(k, N, &count);
        EXPECT_EQ(count, 2 * static_cast<std::size_t>(q - 1)) << q << " " << N;
        const auto chars = all_characters(k, N);
        for (const auto& a : chars)
            for (const auto& b : chars)
                ASSERT_EQ(same_orbit(a, b), label.at(character_index(a)) == label.at(character_index(b)))
                    << a.render() << " " << b.render();
        EXPECT_EQ(orbit_count(k, N), count);
        EXPECT_EQ(cuspidal_count(k, N), 2 * count);
    }
}

TEST(Orbits, CanonicalRepresentatives) {
    for (int q : {3, 5, 7, 11}) {
        const ResidueField& k = ResidueField::prime(q);
        for (std::size_t N = 1; N <= 3; ++N) {
            const auto reps = canonical_representatives(k, N);
            EXPECT_EQ(reps.size(), 2 * static_cast<std::size_t>(q - 1));
            for (std::size_t i = 0; i < reps.size(); ++i) {
                EXPECT_EQ(canonical(reps[i]), reps[i]);
                for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(same_orbit(reps[i], reps[j]));
            }
        }
    }
}

TEST(Orbits, CensusAtQ3) {
    const ResidueField& k = ResidueField::prime(3);
    for (std::size_t N = 1; N <= 2; ++N) {
        const OrbitCensus c = orbit_census(k, N, true);
        EXPECT_EQ(c.orbits, 4u);
        EXPECT_TRUE(c.criteria_match);
        EXPECT_TRUE(c.canonical_match);
        EXPECT_EQ(c.pairs_checked, c.tuples * c.tuples);
    }
}

TEST(TorusAction, MatchesMatrixConjugation) {
    for (int q : {3, 5}) {
        const ResidueField& k = ResidueField::prime(q);
        for (std::size_t N = 1; N <= 2; ++N) {
            const AffGenChar l = from_beta(k, N);
            for (const auto& d : torus(k, N)) {
                const MatLS T = torus_matrix(k, d), Ti = T.inverse();
                const AffGenChar c = conj_by_torus(l, d);
                for (std::size_t j = 0; j <= N; ++j)
                    for (Fq u : k.units()) {
                        const MatLS x = coordinate_element(k, N, j, u);
                        EXPECT_EQ(character_argument(c, x), character_argument(l, T * x * Ti));
                    }
            }
        }
    }
}

TEST(Characters, PsiBetaParametersAndTwist) {
    const ResidueField& k = ResidueField::prime(5);
    const AffGenChar b = from_beta(k, 2);
    EXPECT_EQ(b.render(), "(3, 4; 1)");
    const AffGenChar t = gsp_twist(b);
    EXPECT_FALSE(same_orbit(t, b));
    EXPECT_TRUE(same_orbit(gsp_twist(t), b));
    EXPECT_EQ(from_psi_twist(k, 2, k.from_int(3)).alpha, (std::vector<Fq>(3, k.from_int(3))));
    EXPECT_THROW(make_char(k, {k.one(), k.zero()}), Error);
}

TEST(Characters, PrimitiveElementGeneratesUnits) {
    for (int q : {3, 5, 7, 11, 13}) {
        const ResidueField& k = ResidueField::prime(q);
        const Fq g = primitive_element(k);
        std::set<std::uint32_t> seen;
        for (int e = 0; e < q - 1; ++e) seen.insert(k.pow(g, e).v);
        EXPECT_EQ(seen.size(), static_cast<std::size_t>(q - 1));
    }
}

TEST(Cayley, CoordinateElementsAreSymplecticAndInI1) {
    const ResidueField& k = ResidueField::prime(7);
    for (std::size_t N = 1; N <= 3; ++N)
        for (std::size_t j = 0; j <= N; ++j) {
            const MatLS x = coordinate_element(k, N, j, k.from_int(3));
            EXPECT_TRUE(preserves_form(x, form_h(2 * N)).ok);
            EXPECT_TRUE(order_filtration(standard_chain_2N(N), 1).contains(x - MatLS::identity(k, 2 * N)));
        }
}
