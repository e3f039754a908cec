// End-to-end tests of the divkit binary: spawn it, capture stdout and the
// exit code, check the JSON it prints and the files it writes.
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(DIVKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/divkit_cli_test_") + name;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

const char* kBer12 = R"({"atoms":[{"label":"0","p":0.5},{"label":"1","p":0.5}]})";
const char* kBer14 = R"({"atoms":[{"label":"0","p":0.75},{"label":"1","p":0.25}]})";

} // namespace

TEST_CASE("div subcommand") {
    write_text(temp_path("p.json"), kBer12);
    write_text(temp_path("q.json"), kBer14);

    RunResult same = run_cli("div --p " + temp_path("p.json") + " --q " +
                             temp_path("p.json") + " --f tv");
    CHECK(same.exit_code == 0);
    json j = json::parse(same.out);
    CHECK(j["value"] == 0.0);

    RunResult r = run_cli("div --p " + temp_path("p.json") + " --q " +
                          temp_path("q.json") + " --f pearson --report-parts");
    CHECK(r.exit_code == 0);
    json jr = json::parse(r.out);
    CHECK(jr["value"].get<double>() == doctest::Approx(1.0 / 3.0));
    CHECK(jr.contains("lower_part"));
    CHECK(jr["singular_mass"] == 0.0);

    // infinite divergence serializes as the string "inf"
    write_text(temp_path("da.json"), R"({"atoms":[{"label":"a","p":1.0}]})");
    write_text(temp_path("db.json"), R"({"atoms":[{"label":"b","p":1.0}]})");
    RunResult inf = run_cli("div --p " + temp_path("da.json") + " --q " +
                            temp_path("db.json") + " --f kl");
    CHECK(inf.exit_code == 0);
    CHECK(json::parse(inf.out)["value"] == "inf");

    // byte-identical output on identical invocations
    RunResult again = run_cli("div --p " + temp_path("p.json") + " --q " +
                              temp_path("q.json") + " --f pearson --report-parts");
    CHECK(again.out == r.out);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("div --p missing.json --q also-missing.json --f tv").exit_code == 3);
    CHECK(run_cli("div --nonsense-flag").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);

    write_text(temp_path("bad.json"), "{broken");
    write_text(temp_path("p.json"), kBer12);
    CHECK(run_cli("div --p " + temp_path("bad.json") + " --q " + temp_path("p.json") +
                  " --f tv")
              .exit_code == 3);
    CHECK(run_cli("div --p " + temp_path("p.json") + " --q " + temp_path("p.json") +
                  " --f bogus")
              .exit_code == 2);
}

TEST_CASE("examples and csiszar reproduce the worked value") {
    std::string joint = temp_path("bernoulli.json");
    RunResult ex = run_cli("examples --out " + joint);
    CHECK(ex.exit_code == 0);
    CHECK(json::parse(read_text(joint))["pmf"][1][1] == 0.3125);

    RunResult r = run_cli("csiszar --joint " + joint + " --f pearson");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(1.0 / 15.0).epsilon(1e-12));

    RunResult table = run_cli("csiszar --joint " + joint + " --f pearson --f kl");
    json jt = json::parse(table.out);
    CHECK(jt["results"].size() == 2);
}

TEST_CASE("copula subcommand writes grids and samples") {
    std::string joint = temp_path("bernoulli.json");
    run_cli("examples --out " + joint);
    std::string grid = temp_path("grid.csv"), samples = temp_path("samples.csv");

    RunResult r = run_cli("copula --joint " + joint + " --f pearson --grid-csv " + grid +
                          " --sample 500 --scheme antithetic --seed 9 --sample-csv " +
                          samples);
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(1.0 / 15.0).epsilon(1e-12));
    CHECK(j["scheme"] == "antithetic");

    std::string grid_text = read_text(grid);
    CHECK(grid_text.rfind("i,j,u_lo,u_hi,v_lo,v_hi,mass,density\n", 0) == 0);
    std::string sample_text = read_text(samples);
    CHECK(std::count(sample_text.begin(), sample_text.end(), '\n') == 501);

    // identical seeds give identical sample files
    std::string samples2 = temp_path("samples2.csv");
    run_cli("copula --joint " + joint + " --f pearson --sample 500 --scheme antithetic "
            "--seed 9 --sample-csv " + samples2);
    CHECK(read_text(samples2) == sample_text);
}

TEST_CASE("fgm and renyi subcommands") {
    RunResult r = run_cli("fgm --theta 1 --f pearson --order 128");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["converged"] == true);
    CHECK(j["value"].get<double>() ==
          doctest::Approx(j["closed_form"].get<double>()).epsilon(1e-6));

    write_text(temp_path("p.json"), kBer12);
    write_text(temp_path("q.json"), kBer14);
    RunResult ren = run_cli("renyi --p " + temp_path("p.json") + " --q " +
                            temp_path("q.json") + " --alpha 2");
    CHECK(ren.exit_code == 0);
    CHECK(json::parse(ren.out)["value"].get<double>() ==
          doctest::Approx(std::log(4.0 / 3.0)));
}

TEST_CASE("check subcommand") {
    RunResult r = run_cli("check --suite duality --trials 100 --seed 5");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["suite"] == "duality");

    CHECK(run_cli("check --suite nope --trials 5").exit_code == 2);

    // deterministic: same seed, same bytes
    RunResult again = run_cli("check --suite duality --trials 100 --seed 5");
    CHECK(again.out == r.out);
}
