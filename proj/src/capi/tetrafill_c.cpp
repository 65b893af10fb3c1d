// Copyright 2026 The tetrafill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tetrafill/tetrafill.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "commands.hpp"
#include "errors.hpp"

struct tf_state {
    tetrafill::PureState state;
};

struct tf_mixed_state {
    tetrafill::MixedState rho;
};

namespace {

using namespace tetrafill;

thread_local std::string last_error;

tf_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return TF_ERR_INVALID_ARGUMENT;
        case ErrorCode::DimensionMismatch:
            return TF_ERR_DIMENSION_MISMATCH;
        case ErrorCode::ZeroVector:
            return TF_ERR_ZERO_VECTOR;
        case ErrorCode::NotUnitary:
            return TF_ERR_NOT_UNITARY;
        case ErrorCode::Parse:
            return TF_ERR_PARSE;
        case ErrorCode::NonConvergence:
            return TF_ERR_NON_CONVERGENCE;
        case ErrorCode::InfeasibleProfile:
            return TF_ERR_INFEASIBLE_PROFILE;
        case ErrorCode::InternalConsistency:
            return TF_ERR_INTERNAL_CONSISTENCY;
        case ErrorCode::Unsupported:
            return TF_ERR_UNSUPPORTED;
    }
    return TF_ERR_UNKNOWN;
}

tf_status fail(tf_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <typename F>
tf_status guarded(F &&body) {
    try {
        body();
        return TF_OK;
    } catch (const Error &e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(TF_ERR_UNKNOWN, "out of memory");
    } catch (const std::exception &e) {
        return fail(TF_ERR_UNKNOWN, e.what());
    }
}

void require(bool ok, const char *what) {
    if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

SolverOptions solver_from(const tf_solver_options *o) {
    if (o == nullptr) return {};
    require(o->tol > 0.0, "tol must be positive");
    require(o->max_iter >= 1, "max_iter must be >= 1");
    require(o->restarts >= 0, "restarts must be >= 0");
    return {o->tol, o->max_iter, o->restarts, o->seed};
}

tf_solver_options solver_to(const SolverOptions &o) { return {o.tol, o.max_iter, o.restarts, o.seed}; }

ConcurrenceProfile profile_from(const tf_profile *p) {
    ConcurrenceProfile out;
    for (int i = 0; i < 4; ++i) out.one_to_other[i] = p->one_to_other[i];
    for (int k = 0; k < 3; ++k) out.two_to_other[k] = p->two_to_other[k];
    return out;
}

tf_profile profile_to(const ConcurrenceProfile &p) {
    tf_profile out{};
    for (int i = 0; i < 4; ++i) out.one_to_other[i] = p.one_to_other[i];
    for (int k = 0; k < 3; ++k) out.two_to_other[k] = p.two_to_other[k];
    return out;
}

tf_sigma sigma_to(const SigmaSolution &s) {
    tf_sigma out{};
    for (int p = 0; p < 6; ++p) out.sigma[p] = s.sigma[p];
    out.lambda = s.lambda;
    out.residual = s.residual;
    out.iterations = s.iterations;
    out.degenerate = s.degenerate ? 1 : 0;
    return out;
}

tf_degeneracy degeneracy_to(DegeneracyClass c) {
    switch (c) {
        case DegeneracyClass::Generic:
            return TF_DEGENERACY_GENERIC;
        case DegeneracyClass::TwoToOtherBisep:
            return TF_DEGENERACY_TWO_TO_OTHER_BISEP;
        case DegeneracyClass::OneToOtherBisep:
            return TF_DEGENERACY_ONE_TO_OTHER_BISEP;
        case DegeneracyClass::CoplanarImpossible:
            return TF_DEGENERACY_COPLANAR_IMPOSSIBLE;
        case DegeneracyClass::ProductDot:
            return TF_DEGENERACY_PRODUCT_DOT;
    }
    return TF_DEGENERACY_GENERIC;
}

tf_state *wrap(PureState s) { return new tf_state{std::move(s)}; }

}  // namespace

extern "C" {

const char *tf_version(void) { return "0.1.0"; }

const char *tf_last_error(void) { return last_error.c_str(); }

const char *tf_status_name(tf_status status) {
    switch (status) {
        case TF_OK:
            return "ok";
        case TF_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case TF_ERR_DIMENSION_MISMATCH:
            return "dimension mismatch";
        case TF_ERR_ZERO_VECTOR:
            return "zero vector";
        case TF_ERR_NOT_UNITARY:
            return "not unitary";
        case TF_ERR_PARSE:
            return "parse error";
        case TF_ERR_NON_CONVERGENCE:
            return "non-convergence";
        case TF_ERR_INFEASIBLE_PROFILE:
            return "infeasible profile";
        case TF_ERR_INTERNAL_CONSISTENCY:
            return "internal consistency";
        case TF_ERR_UNSUPPORTED:
            return "unsupported";
        case TF_ERR_IO:
            return "i/o error";
        case TF_ERR_UNKNOWN:
            break;
    }
    return "unknown error";
}

void tf_string_free(char *s) { std::free(s); }

tf_solver_options tf_solver_options_default(void) { return solver_to(SolverOptions{}); }

tf_verify_options tf_verify_options_default(void) {
    const VerifyOptions v;
    return {v.samples, v.seed, v.restarts, v.unitaries, v.threads, solver_to(v.solver)};
}

tf_convex_roof_options tf_convex_roof_options_default(void) {
    const ConvexRoofOptions c;
    return {c.ensemble_size, c.budget, c.starts, c.seed, solver_to(c.solver)};
}

tf_status tf_state_from_amplitudes(int n_qubits, const tf_complex *amplitudes, size_t count, tf_state **out) {
    return guarded([&] {
        require(out != nullptr && (amplitudes != nullptr || count == 0), "null argument");
        std::vector<Complex> values(count);
        for (size_t i = 0; i < count; ++i) values[i] = {amplitudes[i].re, amplitudes[i].im};
        *out = wrap(make_state(n_qubits, values));
    });
}

tf_status tf_state_named(const char *name, tf_state **out) {
    return guarded([&] {
        require(name != nullptr && out != nullptr, "null argument");
        *out = wrap(named_state(parse_named_state(name)));
    });
}

tf_status tf_state_haar(int n_qubits, uint64_t seed, tf_state **out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = wrap(haar_random_state(n_qubits, seed));
    });
}

tf_status tf_state_biseparable(const int *left, size_t left_count, uint64_t seed, tf_state **out) {
    return guarded([&] {
        require(left != nullptr && out != nullptr, "null argument");
        const Bipartition cut = Bipartition::make(4, std::vector<int>(left, left + left_count));
        *out = wrap(random_biseparable_state(cut, seed));
    });
}

tf_status tf_state_from_json(const char *json, tf_state **out) {
    return guarded([&] {
        require(json != nullptr && out != nullptr, "null argument");
        *out = wrap(parse_state_json(json));
    });
}

tf_status tf_state_to_json(const tf_state *state, char **out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        *out = copy_string(dump(state_to_json(state->state)));
    });
}

int tf_state_qubits(const tf_state *state) { return state == nullptr ? 0 : state->state.n_qubits(); }

tf_status tf_state_amplitudes(const tf_state *state, tf_complex *out, size_t count, size_t *written) {
    return guarded([&] {
        require(state != nullptr && (out != nullptr || count == 0), "null argument");
        const auto dim = static_cast<size_t>(state->state.dim());
        for (size_t i = 0; i < std::min(count, dim); ++i) {
            const Complex a = state->state[static_cast<Eigen::Index>(i)];
            out[i] = {a.real(), a.imag()};
        }
        if (written != nullptr) *written = dim;
    });
}

tf_status tf_state_apply_local_unitary(const tf_state *state, int qubit, const tf_complex u[4], tf_state **out) {
    return guarded([&] {
        require(state != nullptr && u != nullptr && out != nullptr, "null argument");
        Eigen::Matrix2cd m;
        m << Complex(u[0].re, u[0].im), Complex(u[1].re, u[1].im), Complex(u[2].re, u[2].im),
            Complex(u[3].re, u[3].im);
        *out = wrap(apply_local_unitary(state->state, qubit, m));
    });
}

tf_status tf_state_permute(const tf_state *state, const int *perm, size_t count, tf_state **out) {
    return guarded([&] {
        require(state != nullptr && perm != nullptr && out != nullptr, "null argument");
        const std::vector<int> p(perm, perm + count);
        *out = wrap(permute_qubits(state->state, p));
    });
}

void tf_state_free(tf_state *state) { delete state; }

tf_status tf_profile_of(const tf_state *state, tf_profile *out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        *out = profile_to(concurrence_profile(state->state));
    });
}

tf_status tf_profile_with_factor(const tf_state *state, double two_to_other_factor, tf_profile *out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        require(two_to_other_factor > 0.0, "factor must be positive");
        *out = profile_to(concurrence_profile(state->state, two_to_other_factor));
    });
}

tf_status tf_pairwise(const tf_state *state, double out[6]) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        const PairwiseConcurrences c = pairwise_concurrences(state->state);
        for (int p = 0; p < 6; ++p) out[p] = c.values[p];
    });
}

tf_status tf_simplex_check(const tf_profile *profile, int *holds, double margins[4]) {
    return guarded([&] {
        require(profile != nullptr && holds != nullptr, "null argument");
        const SimplexReport r = check_simplex_inequality(profile_from(profile));
        *holds = r.holds ? 1 : 0;
        if (margins != nullptr) {
            for (int i = 0; i < 4; ++i) margins[i] = r.margins[i];
        }
    });
}

tf_status tf_monogamy_check(const tf_state *state, int *holds, double slack[4]) {
    return guarded([&] {
        require(state != nullptr && holds != nullptr, "null argument");
        const MonogamyReport r = check_monogamy(state->state);
        *holds = r.holds ? 1 : 0;
        if (slack != nullptr) {
            for (int i = 0; i < 4; ++i) slack[i] = r.slack[i];
        }
    });
}

tf_status tf_solve_sigma(const tf_profile *profile, const tf_solver_options *options, tf_sigma *out) {
    return guarded([&] {
        require(profile != nullptr && out != nullptr, "null argument");
        *out = sigma_to(solve_sigma(profile_from(profile), solver_from(options)));
    });
}

tf_status tf_volume(const double sigma[6], double *out) {
    return guarded([&] {
        require(sigma != nullptr && out != nullptr, "null argument");
        std::array<double, 6> s{};
        for (int p = 0; p < 6; ++p) s[p] = sigma[p];
        *out = volume(s).V;
    });
}

const char *tf_degeneracy_name(tf_degeneracy degeneracy) {
    switch (degeneracy) {
        case TF_DEGENERACY_GENERIC:
            return "Generic";
        case TF_DEGENERACY_TWO_TO_OTHER_BISEP:
            return "TwoToOtherBisep";
        case TF_DEGENERACY_ONE_TO_OTHER_BISEP:
            return "OneToOtherBisep";
        case TF_DEGENERACY_COPLANAR_IMPOSSIBLE:
            return "CoplanarImpossible";
        case TF_DEGENERACY_PRODUCT_DOT:
            return "ProductDot";
    }
    return "unknown";
}

tf_status tf_measure(const tf_state *state, const tf_solver_options *options, tf_measure_report *out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        const MeasureReport r = measure(state->state, solver_from(options));
        out->f4 = r.f4;
        out->gmc = r.gmc;
        out->gbc = r.gbc;
        out->cyclic_quad_area = r.cyclic_quad_area;
        out->volume = r.tetra.volume.V;
        out->degeneracy = degeneracy_to(r.degeneracy);
        out->profile = profile_to(r.profile);
        out->sigma = sigma_to(r.tetra.sigma);
    });
}

tf_status tf_measure_json(const tf_state *state, const tf_solver_options *options, char **out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        *out = copy_string(dump(report_to_json(measure(state->state, solver_from(options)))));
    });
}

tf_status tf_f4_of_profile(const tf_profile *profile, const tf_solver_options *options, double *out) {
    return guarded([&] {
        require(profile != nullptr && out != nullptr, "null argument");
        *out = tetra_report(profile_from(profile), solver_from(options)).f4;
    });
}

tf_status tf_f3(const tf_state *state, double *out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        *out = concurrence_fill_3(state->state);
    });
}

tf_status tf_cyclic_quad_area(const tf_profile *profile, double *out) {
    return guarded([&] {
        require(profile != nullptr && out != nullptr, "null argument");
        *out = cyclic_quadrilateral_area(profile_from(profile));
    });
}

tf_status tf_compare(const tf_state *a, const tf_state *b, const tf_solver_options *options, const char *format,
                     char **out) {
    return guarded([&] {
        require(a != nullptr && b != nullptr && out != nullptr, "null argument");
        const TableFormat f = parse_table_format(format == nullptr ? "json" : format);
        *out = copy_string(format_compare(compare(a->state, b->state, solver_from(options)), f));
    });
}

tf_status tf_verify(const char *suite, const tf_verify_options *options, char **out_json, int *failed) {
    return guarded([&] {
        require(suite != nullptr && out_json != nullptr, "null argument");
        VerifyOptions v;
        if (options != nullptr) {
            v.samples = options->samples;
            v.seed = options->seed;
            v.restarts = options->restarts;
            v.unitaries = options->unitaries;
            v.threads = options->threads;
            v.solver = solver_from(&options->solver);
        }
        const VerifySummary s = run_verify(parse_suite(suite), v);
        *out_json = copy_string(dump(verify_to_json(s)));
        if (failed != nullptr) *failed = s.failed;
    });
}

tf_status tf_export_geometry(const tf_state *state, const char *format, const tf_solver_options *options,
                             char **out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        const MeshFormat f = parse_mesh_format(format == nullptr ? "obj" : format);
        *out = copy_string(export_geometry(state->state, f, solver_from(options)));
    });
}

tf_status tf_mixed_from_json(const char *json, tf_mixed_state **out) {
    return guarded([&] {
        require(json != nullptr && out != nullptr, "null argument");
        *out = new tf_mixed_state{MixedState::make(parse_density_json(json))};
    });
}

tf_status tf_mixed_from_state(const tf_state *state, tf_mixed_state **out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        require(state->state.n_qubits() == 4, "mixed states must have four qubits");
        *out = new tf_mixed_state{MixedState::make(DensityMatrix::from_pure(state->state.amplitudes()))};
    });
}

int tf_mixed_rank(const tf_mixed_state *rho) { return rho == nullptr ? 0 : rho->rho.rank(); }

tf_status tf_convex_roof(const tf_mixed_state *rho, const tf_convex_roof_options *options, double *value,
                         char **out_json) {
    return guarded([&] {
        require(rho != nullptr, "null argument");
        ConvexRoofOptions c;
        if (options != nullptr) {
            c.ensemble_size = options->ensemble_size;
            c.budget = options->budget;
            c.starts = options->starts;
            c.seed = options->seed;
            c.solver = solver_from(&options->solver);
        }
        const ConvexRoofResult r = convex_roof_f4(rho->rho, c);
        if (value != nullptr) *value = r.value;
        if (out_json != nullptr) *out_json = copy_string(dump(convex_roof_to_json(r)));
    });
}

void tf_mixed_free(tf_mixed_state *rho) { delete rho; }

}  // extern "C"
