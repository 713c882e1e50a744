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

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cusplab/cusplab.h"

namespace {

int emit(cusplab_status s, char* text) {
    if (text) {
        std::fputs(text, stdout);
        cusplab_string_free(text);
    }
    if (s != CUSPLAB_OK && s != CUSPLAB_E_IDENTITY) std::fprintf(stderr, "error: %s\n", cusplab_last_error());
    return s == CUSPLAB_E_INTERNAL ? 70 : static_cast<int>(s);
}

int parse_chi(const std::string& s) {
    if (s == "+1" || s == "1") return 1;
    if (s == "-1") return -1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for simple cuspidal representations of symplectic groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cusplab_version()));

    cusplab_verify_options vopt;
    cusplab_verify_options_default(&vopt);
    std::vector<std::string> suites{"all"};
    bool vjson = false;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suites, "gauss|zolotarev|lattice|beta|decomp|hecke|classify|jordan|method|all")
        ->delimiter(',')
        ->capture_default_str();
    verify->add_option("--qmax", vopt.qmax, "largest odd prime q (<= 23)")->capture_default_str();
    verify->add_option("--nmax", vopt.nmax, "largest N (<= 4)")->capture_default_str();
    verify->add_option("--seed", vopt.seed, "seed for randomized cases")->capture_default_str();
    verify->add_option("--decomp-instances", vopt.decomp_instances, "instances per solver per (q, N)")
        ->capture_default_str();
    verify->add_option("--relprec", vopt.relprec, "relative precision of series inversions")->capture_default_str();
    verify->add_option("--budget", vopt.term_budget, "term budget for character sums")->capture_default_str();
    verify->add_option("--threads", vopt.threads, "worker threads (0: CUSPLAB_THREADS or hardware)");
    verify->add_flag("--json", vjson, "JSON report");

    int jn = 1, jq = 3;
    std::string jchi = "+1";
    bool jjson = false;
    auto* jordan = app.add_subcommand("jordan", "Jordan set of the simple cuspidal with psi_beta");
    jordan->add_option("--n", jn, "N")->required();
    jordan->add_option("--q", jq, "odd prime q")->required();
    jordan->add_option("--chi", jchi, "central character at -1: +1 or -1")->capture_default_str();
    jordan->add_flag("--json", jjson, "JSON output");

    std::string hcase, hdelta = "quadratic", hchi = "+1";
    int hq = 3, hn = 1, ha = 1;
    std::uint64_t hbudget = vopt.term_budget;
    bool hjson = false;
    auto* hecke = app.add_subcommand("hecke", "character sums of the Hecke algebra generators");
    hecke->add_option("--case", hcase, "gl1-b0|gl1-b1|gl2n-b0|gl2n-b1")
        ->required()
        ->check(CLI::IsMember({"gl1-b0", "gl1-b1", "gl2n-b0", "gl2n-b1"}));
    hecke->add_option("--q", hq, "odd prime q")->required();
    hecke->add_option("--n", hn, "N")->capture_default_str();
    hecke->add_option("--delta", hdelta, "quadratic|trivial")
        ->check(CLI::IsMember({"quadratic", "trivial"}))
        ->capture_default_str();
    hecke->add_option("--a", ha, "additive character psi(a x)")->capture_default_str();
    hecke->add_option("--chi", hchi, "chi(-1) for gl2n-b0")->capture_default_str();
    hecke->add_option("--budget", hbudget, "term budget")->capture_default_str();
    hecke->add_flag("--json", hjson, "JSON output");

    int cq = 3, cn = 1;
    bool cjson = false;
    auto* classify = app.add_subcommand("classify", "orbits of affine generic characters");
    classify->add_option("--q", cq, "odd prime q")->required();
    classify->add_option("--n", cn, "N")->capture_default_str();
    classify->add_flag("--json", cjson, "JSON output");

    int gq = 3;
    bool gjson = false;
    auto* gauss = app.add_subcommand("gauss", "quadratic Gauss sum and its normalisation");
    gauss->add_option("--q", gq, "odd prime q")->required();
    gauss->add_flag("--json", gjson, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    char* text = nullptr;
    if (*verify) {
        std::string list;
        for (const auto& s : suites) list += (list.empty() ? "" : ",") + s;
        cusplab_report* r = nullptr;
        const cusplab_status s = cusplab_verify(list.c_str(), &vopt, &r);
        if (!r) return emit(s, nullptr);
        const cusplab_status t = vjson ? cusplab_report_json(r, 2, &text) : cusplab_report_text(r, &text);
        cusplab_report_free(r);
        if (t != CUSPLAB_OK) return emit(t, nullptr);
        if (vjson && text) {
            std::string with_nl = std::string(text) + "\n";
            cusplab_string_free(text);
            std::fputs(with_nl.c_str(), stdout);
            return emit(s, nullptr);
        }
        return emit(s, text);
    }
    if (*jordan) {
        const int chi = parse_chi(jchi);
        if (!chi) {
            std::fprintf(stderr, "error: --chi must be +1 or -1\n");
            return 2;
        }
        cusplab_jordan* j = nullptr;
        cusplab_status s = cusplab_jordan_compute(jn, jq, chi, &j);
        if (s != CUSPLAB_OK) return emit(s, nullptr);
        s = jjson ? cusplab_jordan_json(j, 2, &text) : cusplab_jordan_text(j, &text);
        const bool ok = cusplab_jordan_all_ok(j);
        cusplab_jordan_free(j);
        if (s != CUSPLAB_OK) return emit(s, nullptr);
        if (jjson) {
            std::fputs(text, stdout);
            std::fputs("\n", stdout);
            cusplab_string_free(text);
            text = nullptr;
        }
        return emit(ok ? CUSPLAB_OK : CUSPLAB_E_IDENTITY, text);
    }
    if (*hecke) {
        const int chi = parse_chi(hchi);
        if (!chi) {
            std::fprintf(stderr, "error: --chi must be +1 or -1\n");
            return 2;
        }
        const cusplab_status s =
            cusplab_hecke(hcase.c_str(), hq, hn, hdelta.c_str(), ha, chi, hbudget, hjson ? 1 : 0, &text);
        return emit(s, text);
    }
    if (*classify) {
        const cusplab_status s = cusplab_classify(cq, cn, cjson ? 1 : 0, &text);
        return emit(s, text);
    }
    if (*gauss) {
        const cusplab_status s = cusplab_gauss(gq, gjson ? 1 : 0, &text);
        return emit(s, text);
    }
    return 2;
}
