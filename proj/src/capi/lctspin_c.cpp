/*
   Copyright 2026 The lctspin Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lctspin/lctspin.h"

#include <cstring>
#include <exception>
#include <string>

#include "core/error.hpp"
#include "core/invariant_lab.hpp"
#include "core/io.hpp"
#include "core/spin_rep.hpp"
#include "core/suites.hpp"

using namespace lctspin;

struct lcts_params {
    lct::LctParams value;
};

struct lcts_bundle {
    spin::SpinBundle value;
};

namespace {

thread_local std::string g_last_error;

lcts_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ConstraintViolation: return LCTS_ERR_CONSTRAINT;
        case ErrorKind::DimensionMismatch: return LCTS_ERR_DIMENSION;
        case ErrorKind::ExpDivergence: return LCTS_ERR_EXP_DIVERGENCE;
        case ErrorKind::SizeLimit: return LCTS_ERR_SIZE_LIMIT;
        case ErrorKind::ConventionMismatch: return LCTS_ERR_CONVENTION_MISMATCH;
        case ErrorKind::NoConsistentConvention: return LCTS_ERR_NO_CONVENTION;
        case ErrorKind::AmbiguousConvention: return LCTS_ERR_AMBIGUOUS_CONVENTION;
        case ErrorKind::ParseError: return LCTS_ERR_PARSE;
        case ErrorKind::UnknownSuite: return LCTS_ERR_UNKNOWN_SUITE;
    }
    return LCTS_ERR_INTERNAL;
}

template <class F>
lcts_status guarded(F&& body) {
    g_last_error.clear();
    try {
        body();
        return LCTS_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LCTS_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return LCTS_ERR_INTERNAL;
    }
}

lcts_status invalid(const char* what) {
    g_last_error = what;
    return LCTS_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

suites::SuiteConfig to_config(const lcts_run_config& c) {
    suites::SuiteConfig cfg;
    cfg.sig = lct::Signature(c.n_plus, c.n_minus);
    cfg.seed = c.seed;
    if (c.tol > 0) cfg.tol = c.tol;
    cfg.unsafe_size = c.unsafe_size != 0;
    if (c.draws > 0) cfg.draws = c.draws;
    return cfg;
}

}  // namespace

extern "C" {

lcts_run_config lcts_default_config(void) { return lcts_run_config{1, 0, 1, 0.0, 0, 0}; }

const char* lcts_last_error(void) { return g_last_error.c_str(); }

const char* lcts_status_name(lcts_status status) {
    switch (status) {
        case LCTS_OK: return "ok";
        case LCTS_ERR_CONSTRAINT: return "constraint violation";
        case LCTS_ERR_DIMENSION: return "dimension mismatch";
        case LCTS_ERR_PARSE: return "parse error";
        case LCTS_ERR_UNKNOWN_SUITE: return "unknown suite";
        case LCTS_ERR_SIZE_LIMIT: return "size limit";
        case LCTS_ERR_EXP_DIVERGENCE: return "exponential diverged";
        case LCTS_ERR_NO_CONVENTION: return "no consistent convention";
        case LCTS_ERR_AMBIGUOUS_CONVENTION: return "ambiguous convention";
        case LCTS_ERR_CONVENTION_MISMATCH: return "convention mismatch";
        case LCTS_ERR_INVALID_ARGUMENT: return "invalid argument";
        case LCTS_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void lcts_string_free(char* s) { delete[] s; }

lcts_status lcts_params_parse(const char* json, lcts_params** out) {
    if (!json || !out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] { *out = new lcts_params{io::parse_params(json)}; });
}

void lcts_params_free(lcts_params* params) { delete params; }

int lcts_params_dimension(const lcts_params* params) {
    return params ? static_cast<int>(params->value.dimension()) : 0;
}

lcts_status lcts_params_to_json(const lcts_params* params, char** out) {
    if (!params || !out) return invalid("null argument");
    return guarded([&] { *out = dup_string(io::params_to_json(params->value).dump(2)); });
}

lcts_status lcts_bundle_create(const lcts_params* params, lcts_bundle** out) {
    if (!params || !out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        const lct::Signature& sig = params->value.signature();
        const clifford::LctGenerators lg = clifford::label_lct_generators(sig);
        const spin::SpinConvention conv = spin::convention_probe(sig).convention;
        *out = new lcts_bundle{spin::rho(params->value, lg, conv)};
    });
}

void lcts_bundle_free(lcts_bundle* bundle) { delete bundle; }

lcts_status lcts_bundle_to_json(const lcts_bundle* bundle, char** out) {
    if (!bundle || !out) return invalid("null argument");
    return guarded([&] { *out = dup_string(io::bundle_json(bundle->value).dump(2)); });
}

size_t lcts_bundle_spinor_dim(const lcts_bundle* bundle) {
    return bundle ? static_cast<size_t>(bundle->value.s.rows()) : 0;
}

lcts_status lcts_bundle_apply_spin(const lcts_bundle* bundle, const double* v, double* out, size_t dim) {
    if (!bundle || !v || !out) return invalid("null argument");
    const ComplexMatrix& s = bundle->value.s;
    if (dim != static_cast<size_t>(s.rows())) {
        g_last_error = "vector length " + std::to_string(dim) + " does not match spinor dimension " +
                       std::to_string(s.rows());
        return LCTS_ERR_DIMENSION;
    }
    return guarded([&] {
        Eigen::VectorXcd in(static_cast<Eigen::Index>(dim));
        for (size_t k = 0; k < dim; ++k) in(static_cast<Eigen::Index>(k)) = {v[2 * k], v[2 * k + 1]};
        const Eigen::VectorXcd res = s * in;
        for (size_t k = 0; k < dim; ++k) {
            out[2 * k] = res(static_cast<Eigen::Index>(k)).real();
            out[2 * k + 1] = res(static_cast<Eigen::Index>(k)).imag();
        }
    });
}

lcts_status lcts_verify(const lcts_run_config* config, const char* suites, char** out_json, int* all_pass) {
    if (!config || !suites || !out_json) return invalid("null argument");
    return guarded([&] {
        const suites::SuiteConfig cfg = to_config(*config);
        const Json report = suites::run_suites(suites::resolve_suites(suites, cfg), cfg);
        if (all_pass) *all_pass = report.at("pass").get<bool>() ? 1 : 0;
        *out_json = dup_string(report.dump(2));
    });
}

lcts_status lcts_conventions(const lcts_run_config* config, char** out_json) {
    if (!config || !out_json) return invalid("null argument");
    return guarded([&] { *out_json = dup_string(suites::conventions_ledger(to_config(*config)).dump(2)); });
}

lcts_status lcts_tables(const lcts_run_config* config, char** out_json) {
    if (!config || !out_json) return invalid("null argument");
    return guarded([&] { *out_json = dup_string(suites::tables(to_config(*config)).dump(2)); });
}

lcts_status lcts_invariant(const lcts_run_config* config, char** out_json, int* all_pass) {
    if (!config || !out_json) return invalid("null argument");
    return guarded([&] {
        const suites::SuiteConfig cfg = to_config(*config);
        Json out;
        bool pass = true;
        if (cfg.sig.dimension() == 1) {
            const VerificationReport r = suites::run_suite("invariant", cfg);
            pass = r.all_pass();
            out = r.to_json();
        } else {
            const spin::SpinConvention conv = spin::convention_probe(cfg.sig, cfg.seed).convention;
            out = invariant::nd_invariant_probe(cfg.sig, weyl::convention_plus_i_eta(cfg.sig), conv, cfg.seed,
                                                cfg.unsafe_size)
                      .to_json();
        }
        if (all_pass) *all_pass = pass ? 1 : 0;
        *out_json = dup_string(out.dump(2));
    });
}

}  // extern "C"
