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

#include "cusplab/exactnum.hpp"
#include "cusplab/residue.hpp"

namespace cusplab {

struct SimpleCuspidalData {
    const ResidueField* k = nullptr;
    std::size_t N = 1;
    Sign chi_m1 = 1;  // central character at -1
    Fq a{1};          // psi replaced by x -> psi(a x)
};

SimpleCuspidalData make_data(const ResidueField& k, std::size_t N, Sign chi_m1, Fq a);
SimpleCuspidalData make_data(const ResidueField& k, std::size_t N, Sign chi_m1);

/// (-1)^{(N+1)(q-1)/2}
Sign epsilon1_closed(const SimpleCuspidalData& d);
/// eps1(varpi) from the GL(1) generator norms, moved to N(beta) = det(beta)
Sign epsilon1_from_hecke(const SimpleCuspidalData& d);

/// chi(-1) delta(2) xi
FourthRoot tau_beta_closed(const SimpleCuspidalData& d);
/// inverse of delta(-1) T0(w0) T1(w1); `route` is "full" or "reduced"
FourthRoot tau_beta_from_hecke(const SimpleCuspidalData& d, std::string* route = nullptr,
                               std::uint64_t full_budget = 2000000);

/// v = val det(beta^-1), from the matrix
long det_beta_inv_valuation(const ResidueField& k, std::size_t N);

struct JordanSet {
    SimpleCuspidalData data;
    // (eps1, 1)
    Sign eps1_on_norms = 1;
    Sign eps1_on_norms_hecke = 1;
    Sign eps1_at_varpi = 1;
    // (sigma, 1)
    FourthRoot tau_beta, tau_beta_hecke;
    std::string b1_route;
    FourthRoot tau_minus_beta_sq;   // delta(-1) tau(beta)^2
    FourthRoot tau_minus_beta_2N;   // delta(-1) tau(beta)^{2N}
    mpq_class s_eps1, s_sigma;      // reducibility points
    long v = 1;
    // epsilon factors at 1/2
    FourthRoot eps_eps1, eps_sigma, eps_product;
    // Langlands descriptor
    Sign omega_m1 = 1;
    Sign omega_on_norm = 1;  // omega(-1)^{N-1}
    FourthRoot a_sq;         // tau(2 beta)^2
    std::size_t sigma_dim = 2;

    bool derivations_agree() const;
    bool tau_consistent() const;    // tau(-beta^2) = 1 and tau(-beta^2N) = ((-1)^{(q-1)/2})^{N+1}
    bool eps_product_ok() const;    // = chi(-1)
    bool langlands_ok() const;      // omega(N beta) = eps1, a^2 = omega(-1)
    bool all_ok() const;
};

JordanSet jordan_set(const SimpleCuspidalData& d);
Sign eps_factor_product(const SimpleCuspidalData& d);

std::string render_sign(Sign s);
/// {"N", "q", "chi_m1", "eps1_on_norms", "tau_beta", "reducibility_points",
///  "eps_product", ...}
std::string jordan_json(const JordanSet& j, int indent = 2);
std::string jordan_text(const JordanSet& j);

}  // namespace cusplab
