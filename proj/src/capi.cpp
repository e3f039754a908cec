#include "divkit/divkit.h"

#include <cstring>
#include <sstream>
#include <string>

#include "checks.hpp"
#include "json_io.hpp"

using namespace divkit;

struct divkit_dist {
    DiscreteDistribution v;
};
struct divkit_joint {
    JointDistribution v;
};
struct divkit_kernel {
    StochasticKernel v;
};
struct divkit_generator {
    Generator v;
};
struct divkit_copula {
    GridCopula v;
};

namespace {

thread_local std::string g_last_error;

divkit_status status_of(const Error& e) {
    switch (e.code()) {
        case ErrorCode::invalid_argument: return DIVKIT_ERROR_INVALID_ARGUMENT;
        case ErrorCode::label_mismatch: return DIVKIT_ERROR_LABEL_MISMATCH;
        case ErrorCode::parse_error: return DIVKIT_ERROR_PARSE;
        case ErrorCode::constraint: return DIVKIT_ERROR_CONSTRAINT;
    }
    return DIVKIT_ERROR_INTERNAL;
}

// Runs fn, translating exceptions into status codes + last-error message.
template <typename Fn>
divkit_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return DIVKIT_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DIVKIT_ERROR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* divkit_version(void) { return "0.1.0"; }

const char* divkit_last_error(void) { return g_last_error.c_str(); }

divkit_status divkit_dist_parse(const char* json, divkit_dist** out) {
    if (!json || !out) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out = new divkit_dist{distribution_from_text(json)}; });
}

void divkit_dist_free(divkit_dist* d) { delete d; }

divkit_status divkit_joint_parse(const char* json, divkit_joint** out) {
    if (!json || !out) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out = new divkit_joint{joint_from_text(json)}; });
}

void divkit_joint_free(divkit_joint* j) { delete j; }

divkit_status divkit_kernel_parse(const char* json, divkit_kernel** out) {
    if (!json || !out) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out = new divkit_kernel{kernel_from_text(json)}; });
}

void divkit_kernel_free(divkit_kernel* k) { delete k; }

divkit_status divkit_generator_create(const char* name, divkit_generator** out) {
    if (!name || !out) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out = new divkit_generator{generator_from_spec(name)}; });
}

void divkit_generator_free(divkit_generator* g) { delete g; }

divkit_status divkit_checkerboard(const divkit_joint* j, divkit_copula** out) {
    if (!j || !out) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out = new divkit_copula{checkerboard(j->v)}; });
}

void divkit_copula_free(divkit_copula* c) { delete c; }

void divkit_string_free(char* s) { delete[] s; }

divkit_status divkit_generator_limits(const divkit_generator* g, double* at_zero,
                                      double* conj_at_zero) {
    if (!g || !at_zero || !conj_at_zero) return DIVKIT_ERROR_INVALID_ARGUMENT;
    *at_zero = g->v.at_zero().value();
    *conj_at_zero = g->v.conj_at_zero().value();
    return DIVKIT_OK;
}

divkit_status divkit_sup_bound(const divkit_generator* g, double* out) {
    if (!g || !out) return DIVKIT_ERROR_INVALID_ARGUMENT;
    *out = sup_bound(g->v).value();
    return DIVKIT_OK;
}

divkit_status divkit_f_divergence(const divkit_dist* p, const divkit_dist* q,
                                  const divkit_generator* g, divkit_div_report* out) {
    if (!p || !q || !g || !out) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        DivergenceValue v = f_divergence(p->v, q->v, g->v);
        SymmetricDecomposition sd = symmetric_decomposition(p->v, q->v, g->v);
        out->value = v.value.value();
        out->singular_mass = v.singular_mass;
        out->ac_part = v.absolutely_continuous_part.value();
        out->lower_part = sd.lower_part.value();
        out->upper_part = sd.upper_part.value();
    });
}

divkit_status divkit_renyi(const divkit_dist* p, const divkit_dist* q, double alpha,
                           double* out) {
    if (!p || !q || !out) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out = renyi(p->v, q->v, alpha).value(); });
}

divkit_status divkit_entropy(const divkit_dist* p, double* out) {
    if (!p || !out) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out = entropy(p->v); });
}

divkit_status divkit_csiszar(const divkit_joint* j, const divkit_generator* g,
                             divkit_csiszar_report* out) {
    if (!j || !g || !out) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        CsiszarResult r = csiszar_index(j->v, g->v);
        out->value = r.value.value();
        out->via_conditionals = r.via_conditionals.value();
        out->mutual_information = mutual_information(j->v);
    });
}

divkit_status divkit_copula_divergence(const divkit_copula* c, const divkit_generator* g,
                                       double* out) {
    if (!c || !g || !out) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out = grid_divergence(c->v, g->v).value(); });
}

divkit_status divkit_copula_grid_csv(const divkit_copula* c, char** out_csv) {
    if (!c || !out_csv) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        const GridCopula& C = c->v;
        std::vector<double> ub = C.u_breaks(), vb = C.v_breaks();
        std::ostringstream os;
        os.precision(17);
        os << "i,j,u_lo,u_hi,v_lo,v_hi,mass,density\n";
        for (std::size_t i = 0; i < C.rows(); ++i)
            for (std::size_t j = 0; j < C.cols(); ++j)
                os << i << ',' << j << ',' << ub[i] << ',' << ub[i + 1] << ',' << vb[j]
                   << ',' << vb[j + 1] << ',' << C.mass(i, j) << ',' << C.density(i, j)
                   << '\n';
        *out_csv = dup_string(os.str());
    });
}

divkit_status divkit_sample_csv(const divkit_joint* j, const char* scheme, uint64_t n,
                                uint64_t seed, char** out_csv) {
    if (!j || !scheme || !out_csv) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        auto samples =
            interpolating_sample(j->v, scheme_from_name(scheme), n, seed);
        std::ostringstream os;
        os.precision(17);
        os << "u,v\n";
        for (const auto& s : samples) os << s.u << ',' << s.v << '\n';
        *out_csv = dup_string(os.str());
    });
}

divkit_status divkit_fgm_fit(double p, double q, double r, double* theta_out) {
    if (!theta_out) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *theta_out = fgm_fit_bernoulli(p, q, r).theta(); });
}

divkit_status divkit_fgm_divergence(double theta, const divkit_generator* g, int order,
                                    double* value, int* converged,
                                    double* successive_diff) {
    if (!g || !value) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        QuadratureResult r = fgm_divergence_quadrature(FgmCopula(theta), g->v, order);
        *value = r.value;
        if (converged) *converged = r.converged ? 1 : 0;
        if (successive_diff) *successive_diff = r.successive_diff;
    });
}

divkit_status divkit_fgm_pearson_closed_form(double theta, double* out) {
    if (!out) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out = fgm_pearson_closed_form(theta); });
}

divkit_status divkit_dilog(double x, double* out) {
    if (!out) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] { *out = dilog(x); });
}

divkit_status divkit_check_suite(const char* suite, unsigned trials, uint64_t seed,
                                 char** report_json, int* violations) {
    if (!suite) return DIVKIT_ERROR_INVALID_ARGUMENT;
    return guarded([&] {
        SuiteReport rep = run_check_suite(suite, trials, seed);
        if (violations) *violations = static_cast<int>(rep.violations.size());
        if (report_json) {
            nlohmann::json j{{"suite", rep.suite},
                             {"trials", rep.trials},
                             {"violations", rep.violations},
                             {"passed", rep.passed()}};
            if (!rep.details.empty()) j["details"] = rep.details;
            *report_json = dup_string(j.dump());
        }
    });
}

const char* divkit_check_suite_list(void) {
    static const std::string joined = [] {
        std::string s;
        for (const auto& n : check_suite_names()) {
            if (!s.empty()) s += ' ';
            s += n;
        }
        return s;
    }();
    return joined.c_str();
}

const char* divkit_example_bernoulli_json(void) {
    static const std::string text =
        to_json(bernoulli_pair_joint(0.5, 0.5, 5.0 / 16.0)).dump();
    return text.c_str();
}

} // extern "C"
