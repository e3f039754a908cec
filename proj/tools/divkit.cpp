// divkit command line front end. Everything goes through the C API in
// divkit/divkit.h; this translation unit never touches the C++ core.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "divkit/divkit.h"

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 424242;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
    throw CliError{code, message};
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DIVKIT_SEED"))
        return std::strtoull(env, nullptr, 10);
    return kDefaultSeed;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(kExitInput, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) die(kExitInput, "cannot write file: " + path);
    out << content;
}

// +inf serialized as the string "inf"; JSON has no infinity literal
json num(double v) {
    if (std::isinf(v)) return "inf";
    return v;
}

void emit(const json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << '\n';
}

// RAII wrappers over the opaque C handles
using DistPtr = std::unique_ptr<divkit_dist, decltype(&divkit_dist_free)>;
using JointPtr = std::unique_ptr<divkit_joint, decltype(&divkit_joint_free)>;
using GenPtr = std::unique_ptr<divkit_generator, decltype(&divkit_generator_free)>;
using CopulaPtr = std::unique_ptr<divkit_copula, decltype(&divkit_copula_free)>;

std::string api_error() {
    const char* m = divkit_last_error();
    return m && *m ? m : "unknown error";
}

DistPtr load_dist(const std::string& path) {
    divkit_dist* d = nullptr;
    if (divkit_dist_parse(read_file(path).c_str(), &d) != DIVKIT_OK)
        die(kExitInput, path + ": " + api_error());
    return DistPtr(d, divkit_dist_free);
}

JointPtr load_joint(const std::string& path) {
    divkit_joint* j = nullptr;
    if (divkit_joint_parse(read_file(path).c_str(), &j) != DIVKIT_OK)
        die(kExitInput, path + ": " + api_error());
    return JointPtr(j, divkit_joint_free);
}

GenPtr make_generator(const std::string& name) {
    divkit_generator* g = nullptr;
    if (divkit_generator_create(name.c_str(), &g) != DIVKIT_OK)
        die(kExitUsage, "bad generator '" + name + "': " + api_error());
    return GenPtr(g, divkit_generator_free);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    divkit_string_free(s);
    return out;
}

// ---- subcommand runners ----

int run_div(const std::string& p_path, const std::string& q_path, const std::string& fname,
            bool report_parts, bool pretty) {
    DistPtr p = load_dist(p_path), q = load_dist(q_path);
    GenPtr g = make_generator(fname);
    divkit_div_report r{};
    if (divkit_f_divergence(p.get(), q.get(), g.get(), &r) != DIVKIT_OK)
        die(kExitInput, api_error());
    json out{{"f", fname}, {"value", num(r.value)}, {"singular_mass", r.singular_mass}};
    if (report_parts) {
        out["ac_part"] = num(r.ac_part);
        out["lower_part"] = num(r.lower_part);
        out["upper_part"] = num(r.upper_part);
    }
    emit(out, pretty);
    return kExitOk;
}

int run_csiszar(const std::string& joint_path, const std::vector<std::string>& fnames,
                bool pretty) {
    JointPtr j = load_joint(joint_path);
    json results = json::array();
    for (const auto& fname : fnames) {
        GenPtr g = make_generator(fname);
        divkit_csiszar_report r{};
        if (divkit_csiszar(j.get(), g.get(), &r) != DIVKIT_OK) die(kExitInput, api_error());
        results.push_back({{"f", fname},
                           {"value", num(r.value)},
                           {"via_conditionals", num(r.via_conditionals)},
                           {"mutual_information", num(r.mutual_information)}});
    }
    emit(results.size() == 1 ? results[0] : json{{"results", results}}, pretty);
    return kExitOk;
}

int run_copula(const std::string& joint_path, const std::string& fname,
               const std::string& grid_csv, std::uint64_t sample_n,
               const std::string& scheme, std::uint64_t seed,
               const std::string& sample_csv, bool pretty) {
    JointPtr j = load_joint(joint_path);
    GenPtr g = make_generator(fname);
    CopulaPtr c(nullptr, divkit_copula_free);
    {
        divkit_copula* raw = nullptr;
        if (divkit_checkerboard(j.get(), &raw) != DIVKIT_OK) die(kExitInput, api_error());
        c.reset(raw);
    }
    double value = 0.0;
    if (divkit_copula_divergence(c.get(), g.get(), &value) != DIVKIT_OK)
        die(kExitInput, api_error());

    json out{{"f", fname}, {"value", num(value)}};
    if (!grid_csv.empty()) {
        char* csv = nullptr;
        if (divkit_copula_grid_csv(c.get(), &csv) != DIVKIT_OK) die(kExitInput, api_error());
        write_file(grid_csv, take_string(csv));
        out["grid_csv"] = grid_csv;
    }
    if (sample_n > 0) {
        char* csv = nullptr;
        if (divkit_sample_csv(j.get(), scheme.c_str(), sample_n, seed, &csv) != DIVKIT_OK)
            die(kExitUsage, api_error());
        write_file(sample_csv, take_string(csv));
        out["samples_csv"] = sample_csv;
        out["scheme"] = scheme;
        out["n"] = sample_n;
        out["seed"] = seed;
    }
    emit(out, pretty);
    return kExitOk;
}

int run_fgm(double theta, const std::string& fname, int order, bool pretty) {
    GenPtr g = make_generator(fname);
    double value = 0.0, diff = 0.0;
    int converged = 0;
    if (divkit_fgm_divergence(theta, g.get(), order, &value, &converged, &diff) != DIVKIT_OK)
        die(kExitInput, api_error());
    json out{{"theta", theta},       {"f", fname},
             {"order", order},       {"value", num(value)},
             {"converged", converged != 0}, {"successive_diff", diff}};
    if (fname == "pearson") {
        double cf = 0.0;
        if (divkit_fgm_pearson_closed_form(theta, &cf) == DIVKIT_OK)
            out["closed_form"] = num(cf);
    }
    emit(out, pretty);
    return kExitOk;
}

int run_renyi(const std::string& p_path, const std::string& q_path, double alpha,
              bool pretty) {
    DistPtr p = load_dist(p_path), q = load_dist(q_path);
    double value = 0.0;
    if (divkit_renyi(p.get(), q.get(), alpha, &value) != DIVKIT_OK)
        die(kExitUsage, api_error());
    emit(json{{"alpha", alpha}, {"value", num(value)}}, pretty);
    return kExitOk;
}

int run_check(const std::string& suite, unsigned trials, std::uint64_t seed, bool pretty) {
    std::vector<std::string> suites;
    if (suite == "all") {
        std::istringstream ss(divkit_check_suite_list());
        std::string name;
        while (ss >> name) suites.push_back(name);
    } else {
        suites.push_back(suite);
    }
    json reports = json::array();
    int total_violations = 0;
    for (const auto& s : suites) {
        char* text = nullptr;
        int violations = 0;
        if (divkit_check_suite(s.c_str(), trials, seed, &text, &violations) != DIVKIT_OK)
            die(kExitUsage, api_error());
        reports.push_back(json::parse(take_string(text)));
        total_violations += violations;
    }
    emit(reports.size() == 1 ? reports[0] : json{{"suites", reports}}, pretty);
    return total_violations > 0 ? kExitViolation : kExitOk;
}

int run_examples(const std::string& out_path, bool pretty) {
    write_file(out_path, std::string(divkit_example_bernoulli_json()) + "\n");
    emit(json{{"written", out_path}, {"p", 0.5}, {"q", 0.5}, {"r", 0.3125}}, pretty);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"divkit: f-divergences, Csiszar indices and checkerboard copulas on "
                 "finite discrete distributions"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    std::string p_path, q_path, joint_path, fname = "kl", grid_csv, sample_csv = "samples.csv";
    std::vector<std::string> fnames;
    std::string scheme = "shared", suite, out_path = "bernoulli.json";
    double alpha = 0.5, theta = 0.0;
    int order = 128;
    std::uint64_t sample_n = 0, seed = default_seed();
    unsigned trials = 1000;

    CLI::App* div = app.add_subcommand("div", "f-divergence D_f(P||Q) between two pmfs");
    div->add_option("--p", p_path, "P as distribution JSON")->required();
    div->add_option("--q", q_path, "Q as distribution JSON")->required();
    div->add_option("--f", fname, "generator name")->required();
    bool report_parts = false;
    div->add_flag("--report-parts", report_parts, "include the symmetric decomposition");

    CLI::App* csz = app.add_subcommand(
        "csiszar", "Csiszar index S_f(X,Y) = D_f(P_X x P_Y || joint) of a joint pmf");
    csz->add_option("--joint", joint_path, "joint JSON")->required();
    csz->add_option("--f", fnames, "generator name (repeatable)")->required();

    CLI::App* cop = app.add_subcommand(
        "copula", "checkerboard copula of a joint: divergence, grid CSV, samples");
    cop->add_option("--joint", joint_path, "joint JSON")->required();
    cop->add_option("--f", fname, "generator name")->required();
    cop->add_option("--grid-csv", grid_csv, "write the copula grid to this CSV file");
    cop->add_option("--sample", sample_n, "number of interpolating-copula samples");
    cop->add_option("--scheme", scheme, "shared | independent | antithetic");
    cop->add_option("--seed", seed, "sampler seed (default DIVKIT_SEED or fixed)");
    cop->add_option("--sample-csv", sample_csv, "output CSV for samples");

    CLI::App* fgm = app.add_subcommand("fgm",
                                       "divergence from independence of an FGM copula");
    fgm->add_option("--theta", theta, "FGM parameter in [-1,1]")->required();
    fgm->add_option("--f", fname, "generator name")->required();
    fgm->add_option("--order", order, "Gauss-Legendre order per axis (>= 16)");

    CLI::App* ren = app.add_subcommand("renyi", "Renyi divergence of order alpha");
    ren->add_option("--p", p_path, "P as distribution JSON")->required();
    ren->add_option("--q", q_path, "Q as distribution JSON")->required();
    ren->add_option("--alpha", alpha, "order, in (0, inf); 1 gives KL")->required();

    CLI::App* chk = app.add_subcommand("check", "run a randomized property suite");
    chk->add_option("--suite", suite,
                    std::string("suite name, 'all', or one of: ") + divkit_check_suite_list())
        ->required();
    chk->add_option("--trials", trials, "number of randomized trials");
    chk->add_option("--seed", seed, "suite seed (default DIVKIT_SEED or fixed)");

    CLI::App* ex = app.add_subcommand("examples",
                                      "write the Bernoulli worked-example joint to a file");
    ex->add_option("--out", out_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (div->parsed()) return run_div(p_path, q_path, fname, report_parts, pretty);
        if (csz->parsed()) return run_csiszar(joint_path, fnames, pretty);
        if (cop->parsed())
            return run_copula(joint_path, fname, grid_csv, sample_n, scheme, seed,
                              sample_csv, pretty);
        if (fgm->parsed()) return run_fgm(theta, fname, order, pretty);
        if (ren->parsed()) return run_renyi(p_path, q_path, alpha, pretty);
        if (chk->parsed()) return run_check(suite, trials, seed, pretty);
        if (ex->parsed()) return run_examples(out_path, pretty);
    } catch (const CliError& e) {
        std::cerr << "divkit: " << e.message << '\n';
        return e.exit_code;
    }
    return kExitUsage;
}
