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

#include "cusplab/jordan.hpp"

#include <sstream>

#include "json.hpp"

#include "cusplab/error.hpp"
#include "cusplab/hecke.hpp"
#include "cusplab/matrix.hpp"
#include "cusplab/sympgroups.hpp"

namespace cusplab {

SimpleCuspidalData make_data(const ResidueField& k, std::size_t N, Sign chi_m1, Fq a) {
    require(N >= 1, "N must be positive");
    require(chi_m1 == 1 || chi_m1 == -1, "chi(-1) must be +1 or -1");
    require(!k.is_zero(a), "psi twist must be a unit");
    return SimpleCuspidalData{&k, N, chi_m1, a};
}

SimpleCuspidalData make_data(const ResidueField& k, std::size_t N, Sign chi_m1) {
    return make_data(k, N, chi_m1, k.one());
}

namespace {

Sign delta_of(const ResidueField& k, long n) { return k.delta(k.from_int(n)); }

Sign real_sign(const RayClass& c, const char* what) {
    const auto r = c.fourth_root();
    if (!r || !r->is_real()) fail(ErrorKind::Identity, std::string(what) + " is not real");
    return r->sign();
}

FourthRoot as_root(const RayClass& c, const char* what) {
    const auto r = c.fourth_root();
    if (!r) fail(ErrorKind::Identity, std::string(what) + " is not a fourth root of unity");
    return *r;
}

FourthRoot pow(FourthRoot r, long e) { return FourthRoot(static_cast<int>((r.exponent() * (e % 4)) % 4)); }

}  // namespace

Sign epsilon1_closed(const SimpleCuspidalData& d) {
    const long e = static_cast<long>(d.N + 1) * ((d.k->q() - 1) / 2);
    return e % 2 == 0 ? 1 : -1;
}

Sign epsilon1_from_hecke(const SimpleCuspidalData& d) {
    const ResidueField& k = *d.k;
    const GeneratorPair g = gl1_generator_norms(k, d.a);
    const Sign at_varpi = real_sign(select_selfdual(g).lambda_a, "eps1(varpi)");
    // N(beta) = det(beta) = u t^v with u a unit; eps1 is delta on units
    const LSeries det = beta_matrix(k, d.N).det();
    const long v = det.val();
    const Sign on_unit = k.delta(det.residue_at(v));
    return on_unit * (v % 2 == 0 ? 1 : at_varpi);
}

FourthRoot tau_beta_closed(const SimpleCuspidalData& d) {
    const ResidueField& k = *d.k;
    return FourthRoot::from_sign(d.chi_m1 * delta_of(k, 2)) * xi(k, d.a);
}

FourthRoot tau_beta_from_hecke(const SimpleCuspidalData& d, std::string* route, std::uint64_t full_budget) {
    const ResidueField& k = *d.k;
    const bool full = b1_gl2n_terms(k, d.N) <= full_budget;
    const CycNum s1 = full ? b1_gl2n_full(k, d.N, DeltaKind::Quadratic, d.a)
                           : b1_gl2n_reduced(k, DeltaKind::Quadratic, d.a);
    if (route) *route = full ? "full" : "reduced";
    GeneratorPair g;
    g.T1_val = normalize_against(s1);
    g.T0_val = normalize_against(b0_gl2n(k, d.chi_m1));
    // tau(-beta^-1) ~ T0 T1; tau(-1) = delta(-1) by self-duality on units
    const FourthRoot tau_beta_inv =
        FourthRoot::from_sign(delta_of(k, -1)) * as_root(select_selfdual(g).lambda_a, "T0 T1");
    return tau_beta_inv.inverse();
}

long det_beta_inv_valuation(const ResidueField& k, std::size_t N) {
    return beta_matrix(k, N).inverse().det().val();
}

bool JordanSet::derivations_agree() const {
    return eps1_on_norms == eps1_on_norms_hecke && tau_beta == tau_beta_hecke;
}

bool JordanSet::tau_consistent() const {
    const long h = (data.k->q() - 1) / 2;
    const Sign expect = (h * static_cast<long>(data.N + 1)) % 2 == 0 ? 1 : -1;
    return tau_minus_beta_sq == FourthRoot(0) && tau_minus_beta_2N == FourthRoot::from_sign(expect);
}

bool JordanSet::eps_product_ok() const { return eps_product == FourthRoot::from_sign(data.chi_m1); }

bool JordanSet::langlands_ok() const {
    return omega_on_norm == eps1_on_norms && a_sq == FourthRoot::from_sign(omega_m1) && sigma_dim == 2 * data.N;
}

bool JordanSet::all_ok() const { return derivations_agree() && tau_consistent() && eps_product_ok() && langlands_ok(); }

JordanSet jordan_set(const SimpleCuspidalData& d) {
    const ResidueField& k = *d.k;
    JordanSet j;
    j.data = d;
    j.eps1_on_norms = epsilon1_closed(d);
    j.eps1_on_norms_hecke = epsilon1_from_hecke(d);
    j.eps1_at_varpi = real_sign(select_selfdual(gl1_generator_norms(k, d.a)).lambda_a, "eps1(varpi)");

    j.tau_beta = tau_beta_closed(d);
    j.tau_beta_hecke = tau_beta_from_hecke(d, &j.b1_route);
    const FourthRoot dm1 = FourthRoot::from_sign(delta_of(k, -1));
    j.tau_minus_beta_sq = dm1 * j.tau_beta.square();
    j.tau_minus_beta_2N = dm1 * pow(j.tau_beta, static_cast<long>(2 * d.N));

    j.v = det_beta_inv_valuation(k, d.N);
    j.s_sigma = reducibility_exponents(1, 1, j.v).first;
    j.s_eps1 = reducibility_exponents(1, 1, 1).first;

    const FourthRoot tau_2beta = FourthRoot::from_sign(delta_of(k, 2)) * j.tau_beta;
    j.eps_eps1 = xi(k, d.a);
    j.eps_sigma = tau_2beta.inverse();
    j.eps_product = j.eps_eps1 * j.eps_sigma;

    j.omega_m1 = delta_of(k, -1);
    j.omega_on_norm = (d.N - 1) % 2 == 0 ? 1 : j.omega_m1;
    j.a_sq = tau_2beta.square();
    j.sigma_dim = 2 * d.N;
    return j;
}

Sign eps_factor_product(const SimpleCuspidalData& d) {
    const JordanSet j = jordan_set(d);
    if (!j.eps_product.is_real()) fail(ErrorKind::Identity, "epsilon product is not real");
    return j.eps_product.sign();
}

std::string render_sign(Sign s) { return s > 0 ? "+1" : "-1"; }

namespace {

nlohmann::ordered_json rational_json(const mpq_class& x) {
    if (x.get_den() == 1) return x.get_num().get_si();
    return x.get_str();
}

}  // namespace

std::string jordan_json(const JordanSet& j, int indent) {
    nlohmann::ordered_json o;
    o["N"] = j.data.N;
    o["q"] = j.data.k->q();
    o["chi_m1"] = render_sign(j.data.chi_m1);
    o["eps1_on_norms"] = render_sign(j.eps1_on_norms);
    o["tau_beta"] = j.tau_beta.render();
    o["reducibility_points"] = {rational_json(j.s_eps1), rational_json(j.s_sigma)};
    o["eps_product"] = j.eps_product.is_real() ? render_sign(j.eps_product.sign()) : j.eps_product.render();
    o["psi_twist"] = j.data.k->render(j.data.a);
    o["eps1_at_varpi"] = render_sign(j.eps1_at_varpi);
    o["derivations"] = {
        {"eps1_on_norms_hecke", render_sign(j.eps1_on_norms_hecke)},
        {"tau_beta_hecke", j.tau_beta_hecke.render()},
        {"b1_route", j.b1_route},
        {"agree", j.derivations_agree()},
    };
    o["langlands"] = {
        {"omega", "ramified quadratic"},
        {"omega_m1", render_sign(j.omega_m1)},
        {"omega_on_norm_beta", render_sign(j.omega_on_norm)},
        {"sigma_dim", j.sigma_dim},
        {"sigma_type", "irreducible orthogonal"},
        {"tau_2beta_squared", j.a_sq.render()},
        {"consistent", j.langlands_ok()},
    };
    o["checks"] = {
        {"tau_minus_beta_sq", j.tau_minus_beta_sq.render()},
        {"tau_minus_beta_2N", j.tau_minus_beta_2N.render()},
        {"tau_consistent", j.tau_consistent()},
        {"eps_product_is_chi_m1", j.eps_product_ok()},
    };
    return o.dump(indent);
}

std::string jordan_text(const JordanSet& j) {
    std::ostringstream os;
    os << "Sp(" << 2 * j.data.N << "), q = " << j.data.k->q() << ", chi(-1) = " << render_sign(j.data.chi_m1) << "\n"
       << "  (eps1, " << j.s_eps1.get_str() << "): ramified quadratic, eps1(N(beta)) = "
       << render_sign(j.eps1_on_norms) << "  [hecke route: " << render_sign(j.eps1_on_norms_hecke) << "]\n"
       << "  (sigma, " << j.s_sigma.get_str() << "): tau quadratic on units, tau(beta) = " << j.tau_beta.render()
       << "  [hecke route (" << j.b1_route << "): " << j.tau_beta_hecke.render() << "]\n"
       << "  eps(eps1) eps(sigma) = " << j.eps_product.render() << "\n"
       << "  checks: " << (j.all_ok() ? "all pass" : "FAILED") << "\n";
    return os.str();
}

}  // namespace cusplab
