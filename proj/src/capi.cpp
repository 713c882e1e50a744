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

#include "cusplab/cusplab.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cusplab/error.hpp"
#include "cusplab/genchars.hpp"
#include "cusplab/hecke.hpp"
#include "cusplab/jordan.hpp"
#include "cusplab/residue.hpp"
#include "cusplab/suites.hpp"

struct cusplab_report {
    cusplab::VerifyOptions opt;
    std::vector<cusplab::SuiteReport> reports;
};

struct cusplab_jordan {
    cusplab::JordanSet set;
};

namespace {

using cusplab::Error;
using cusplab::ErrorKind;
using json = nlohmann::ordered_json;

thread_local std::string g_last_error;

cusplab_status set_error(cusplab_status s, const std::string& what) {
    g_last_error = what;
    return s;
}

cusplab_status guarded(const std::function<cusplab_status()>& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::InvalidArgument:
            case ErrorKind::Domain:
                return set_error(CUSPLAB_E_USAGE, e.what());
            case ErrorKind::Budget:
                return set_error(CUSPLAB_E_BUDGET, e.what());
            case ErrorKind::Identity:
                return set_error(CUSPLAB_E_IDENTITY, e.what());
            case ErrorKind::Precision:
                break;
        }
        return set_error(CUSPLAB_E_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return set_error(CUSPLAB_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(CUSPLAB_E_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void require_out(const void* p) { cusplab::require(p != nullptr, "null output pointer"); }

const cusplab::ResidueField& field_for(int q) {
    cusplab::require(q >= 3 && q <= 1000 && q % 2 == 1 && cusplab::is_prime(q), "q must be an odd prime <= 1000");
    return cusplab::ResidueField::prime(q);
}

std::size_t check_n(int n) {
    cusplab::require(n >= 1 && n <= 8, "n must be in [1, 8]");
    return static_cast<std::size_t>(n);
}

cusplab::Sign check_chi(int chi) {
    cusplab::require(chi == 1 || chi == -1, "chi must be +1 or -1");
    return chi;
}

std::string ray_render(const cusplab::CycNum& v) {
    if (v.is_zero()) return "0";
    return cusplab::RayClass(v).render();
}

std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

}  // namespace

extern "C" {

const char* cusplab_version(void) { return "1.0.0"; }

const char* cusplab_last_error(void) { return g_last_error.c_str(); }

void cusplab_string_free(char* s) { std::free(s); }

void cusplab_verify_options_default(cusplab_verify_options* opt) {
    if (!opt) return;
    const cusplab::VerifyOptions d;
    opt->qmax = d.qmax;
    opt->nmax = d.nmax;
    opt->seed = d.seed;
    opt->threads = d.threads;
    opt->term_budget = d.term_budget;
    opt->decomp_instances = d.decomp_instances;
    opt->relprec = d.relprec;
}

cusplab_status cusplab_verify(const char* suites, const cusplab_verify_options* opt, cusplab_report** out) {
    return guarded([&] {
        require_out(out);
        *out = nullptr;
        cusplab::require(suites != nullptr, "null suite list");
        auto r = std::make_unique<cusplab_report>();
        if (opt) {
            r->opt.qmax = opt->qmax;
            r->opt.nmax = opt->nmax;
            r->opt.seed = opt->seed;
            r->opt.threads = opt->threads;
            r->opt.term_budget = opt->term_budget;
            r->opt.decomp_instances = opt->decomp_instances;
            r->opt.relprec = opt->relprec;
        }
        std::vector<std::string> names;
        std::stringstream ss(suites);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) {
                cusplab::require(item == "all" || cusplab::is_suite_name(item), "unknown suite: " + item);
                names.push_back(item);
            }
        cusplab::require(!names.empty(), "no suite selected");
        r->reports = cusplab::run_suites(names, r->opt);
        const bool ok = cusplab_report_passed(r.get());
        *out = r.release();
        return ok ? CUSPLAB_OK : set_error(CUSPLAB_E_IDENTITY, "verification failures");
    });
}

int cusplab_report_passed(const cusplab_report* r) {
    if (!r) return 0;
    for (const auto& s : r->reports)
        if (!s.ok()) return 0;
    return 1;
}

size_t cusplab_report_failure_count(const cusplab_report* r) {
    size_t n = 0;
    if (r)
        for (const auto& s : r->reports) n += s.failures.size();
    return n;
}

cusplab_status cusplab_report_json(const cusplab_report* r, int indent, char** out) {
    return guarded([&] {
        require_out(out);
        cusplab::require(r != nullptr, "null report");
        *out = dup_string(cusplab::reports_json(r->reports, r->opt, indent));
        return CUSPLAB_OK;
    });
}

cusplab_status cusplab_report_text(const cusplab_report* r, char** out) {
    return guarded([&] {
        require_out(out);
        cusplab::require(r != nullptr, "null report");
        *out = dup_string(cusplab::reports_text(r->reports));
        return CUSPLAB_OK;
    });
}

void cusplab_report_free(cusplab_report* r) { delete r; }

cusplab_status cusplab_jordan_compute(int n, int q, int chi_m1, cusplab_jordan** out) {
    return guarded([&] {
        require_out(out);
        *out = nullptr;
        const auto& k = field_for(q);
        auto j = std::make_unique<cusplab_jordan>();
        j->set = cusplab::jordan_set(cusplab::make_data(k, check_n(n), check_chi(chi_m1)));
        *out = j.release();
        return CUSPLAB_OK;
    });
}

int cusplab_jordan_all_ok(const cusplab_jordan* j) { return j && j->set.all_ok() ? 1 : 0; }

cusplab_status cusplab_jordan_json(const cusplab_jordan* j, int indent, char** out) {
    return guarded([&] {
        require_out(out);
        cusplab::require(j != nullptr, "null jordan handle");
        *out = dup_string(cusplab::jordan_json(j->set, indent));
        return CUSPLAB_OK;
    });
}

cusplab_status cusplab_jordan_text(const cusplab_jordan* j, char** out) {
    return guarded([&] {
        require_out(out);
        cusplab::require(j != nullptr, "null jordan handle");
        *out = dup_string(cusplab::jordan_text(j->set));
        return CUSPLAB_OK;
    });
}

void cusplab_jordan_free(cusplab_jordan* j) { delete j; }

cusplab_status cusplab_hecke(const char* case_name, int q, int n, const char* delta, int a, int chi_m1,
                             uint64_t budget, int json_out, char** out) {
    return guarded([&] {
        require_out(out);
        *out = nullptr;
        cusplab::require(case_name && delta, "null argument");
        const std::string c = case_name, d = delta;
        cusplab::require(d == "quadratic" || d == "trivial", "--delta must be quadratic or trivial");
        const auto& k = field_for(q);
        const std::size_t N = check_n(n);
        const cusplab::Sign chi = check_chi(chi_m1);
        cusplab::require(a % q != 0, "a must be a unit");
        const cusplab::Fq fa = k.from_int(a);
        const auto kind = d == "quadratic" ? cusplab::DeltaKind::Quadratic : cusplab::DeltaKind::Trivial;

        json o;
        o["case"] = c;
        o["q"] = q;
        cusplab::CycNum value, closed;
        std::string note;
        bool reduction_ok = true;
        if (c == "gl1-b1" || c == "gl1-b0") {
            cusplab::require(kind == cusplab::DeltaKind::Quadratic, "GL(1) sums use the quadratic character");
            o["a"] = a;
            value = c == "gl1-b1" ? cusplab::b1_gl1(k, fa) : cusplab::b0_gl1(k, fa);
            closed = c == "gl1-b1" ? cusplab::b1_gl1_closed(k, fa) : cusplab::b0_gl1_closed(k, fa);
        } else if (c == "gl2n-b0") {
            o["chi_m1"] = cusplab::render_sign(chi);
            value = cusplab::b0_gl2n(k, chi);
            closed = cusplab::b0_gl2n_closed(k, chi);
        } else if (c == "gl2n-b1") {
            o["N"] = N;
            o["delta"] = d;
            o["a"] = a;
            o["terms"] = cusplab::b1_gl2n_terms(k, N);
            value = cusplab::b1_gl2n_full(k, N, kind, fa, budget);
            closed = cusplab::b1_gl2n_closed(k, N, kind, fa);
            const cusplab::CycNum red = cusplab::b1_gl2n_reduced(k, kind, fa);
            const mpz_class f = cusplab::b1_reduction_factor(k, N);
            reduction_ok = value == red * mpq_class(f);
            o["reduction"] = {{"reduced_value", red.render()}, {"factor", f.get_str()}, {"status", pass_fail(reduction_ok)}};
            if (kind == cusplab::DeltaKind::Trivial) note = "no reducibility at 1";
        } else {
            cusplab::require(false, "--case must be gl1-b0, gl1-b1, gl2n-b0 or gl2n-b1");
        }
        const bool closed_ok = value == closed;
        o["value"] = value.render();
        o["closed_form"] = closed.render();
        o["closed_form_status"] = pass_fail(closed_ok);
        o["ray_class"] = ray_render(value);
        if (!note.empty()) o["note"] = note;
        const bool ok = closed_ok && reduction_ok;
        o["pass"] = ok;

        std::string s;
        if (json_out) {
            s = o.dump(2) + "\n";
        } else {
            std::ostringstream os;
            for (const auto& [key, v] : o.items()) {
                if (key == "reduction") {
                    os << "reduction: " << v["status"].get<std::string>() << " (full = " << v["factor"].get<std::string>()
                       << " * " << v["reduced_value"].get<std::string>() << ")\n";
                } else {
                    os << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
                }
            }
            s = os.str();
        }
        *out = dup_string(s);
        return ok ? CUSPLAB_OK : set_error(CUSPLAB_E_IDENTITY, "sum disagrees with its closed form");
    });
}

cusplab_status cusplab_classify(int q, int n, int json_out, char** out) {
    return guarded([&] {
        require_out(out);
        *out = nullptr;
        const auto& k = field_for(q);
        const std::size_t N = check_n(n);
        cusplab::require(q <= 23 && N <= 3, "classify enumerates (q-1)^(N+1) tuples: q <= 23, n <= 3");
        std::size_t tuples = 1;
        for (std::size_t i = 0; i <= N; ++i) tuples *= static_cast<std::size_t>(q - 1);
        const cusplab::OrbitCensus c = cusplab::orbit_census(k, N, tuples <= 1024);
        const auto reps = cusplab::canonical_representatives(k, N);
        const std::size_t want = 2 * static_cast<std::size_t>(q - 1);
        const bool ok = c.criteria_match && c.canonical_match && c.orbits == want && reps.size() == want;
        json o;
        o["q"] = q;
        o["N"] = N;
        o["tuples"] = c.tuples;
        o["orbits"] = c.orbits;
        o["cuspidal_count"] = 2 * c.orbits;
        o["criteria_match"] = c.criteria_match;
        o["canonical_match"] = c.canonical_match;
        o["pairs_checked"] = c.pairs_checked;
        json r = json::array();
        for (const auto& x : reps) r.push_back(x.render());
        o["representatives"] = r;
        o["psi_beta"] = cusplab::canonical(cusplab::from_beta(k, N)).render();
        o["pass"] = ok;
        std::string s;
        if (json_out) {
            s = o.dump(2) + "\n";
        } else {
            std::ostringstream os;
            os << "q = " << q << ", N = " << N << ": " << c.orbits << " orbits of " << c.tuples << " characters, "
               << 2 * c.orbits << " simple cuspidals\n";
            os << "criteria vs brute force: " << pass_fail(c.criteria_match)
               << (c.pairs_checked ? " (" + std::to_string(c.pairs_checked) + " pairs)" : std::string()) << "\n";
            os << "representatives:\n";
            for (const auto& x : reps) os << "  " << x.render() << "\n";
            os << "psi_beta ~ " << o["psi_beta"].get<std::string>() << "\n";
            s = os.str();
        }
        *out = dup_string(s);
        return ok ? CUSPLAB_OK : set_error(CUSPLAB_E_IDENTITY, "orbit classification mismatch");
    });
}

cusplab_status cusplab_gauss(int q, int json_out, char** out) {
    return guarded([&] {
        require_out(out);
        *out = nullptr;
        const auto& k = field_for(q);
        const cusplab::CycNum G = cusplab::gauss_sum(k);
        const cusplab::Sign dm1 = k.delta(k.from_int(-1));
        const cusplab::FourthRoot x = cusplab::xi(k);
        const bool norm_ok = G * G.conj() == cusplab::CycNum::rational(q, q);
        const bool sq_ok = G * G == cusplab::CycNum::rational(q, mpq_class(dm1 * q));
        const bool xi_ok = x.square() == cusplab::FourthRoot::from_sign(dm1);
        const bool ok = norm_ok && sq_ok && xi_ok;
        json o;
        o["q"] = q;
        o["G"] = G.render();
        o["G_conj_G"] = (G * G.conj()).render();
        o["G_squared"] = (G * G).render();
        o["delta_m1"] = cusplab::render_sign(dm1);
        o["xi"] = x.render();
        o["xi_squared"] = x.square().render();
        o["checks"] = {{"norm", pass_fail(norm_ok)}, {"square", pass_fail(sq_ok)}, {"xi_square", pass_fail(xi_ok)}};
        o["pass"] = ok;
        std::string s;
        if (json_out) {
            s = o.dump(2) + "\n";
        } else {
            std::ostringstream os;
            os << "G = " << G.render() << "\n"
               << "G conj(G) = " << o["G_conj_G"].get<std::string>() << "  " << pass_fail(norm_ok) << "\n"
               << "G^2 = " << o["G_squared"].get<std::string>() << "  " << pass_fail(sq_ok) << "\n"
               << "xi = " << x.render() << ", xi^2 = " << x.square().render() << "  " << pass_fail(xi_ok) << "\n";
            s = os.str();
        }
        *out = dup_string(s);
        return ok ? CUSPLAB_OK : set_error(CUSPLAB_E_IDENTITY, "Gauss sum identity failed");
    });
}

}  // extern "C"
