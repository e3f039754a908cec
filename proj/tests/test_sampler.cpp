#include <doctest.h>

#include <cmath>

#include "checks.hpp"
#include "copulas.hpp"
#include "oracles.hpp"

using namespace divkit;

namespace {

JointDistribution worked_example() { return bernoulli_pair_joint(0.5, 0.5, 5.0 / 16.0); }

double empirical_cdf(const std::vector<SamplePoint>& s, double u, double v) {
    double hits = 0.0;
    for (const auto& p : s) hits += (p.u <= u && p.v <= v) ? 1.0 : 0.0;
    return hits / static_cast<double>(s.size());
}

} // namespace

TEST_CASE("degenerate joint: the cell is the whole square") {
    auto J = product(DiscreteDistribution::point_mass("a"),
                     DiscreteDistribution::point_mass("b"));
    auto s = interpolating_sample(J, RandomizationScheme::shared, 4000, 99);
    std::vector<double> us, vs;
    for (const auto& p : s) {
        CHECK(p.u > 0.0);
        CHECK(p.u <= 1.0);
        us.push_back(p.u);
        vs.push_back(p.v);
    }
    CHECK(ks_uniform_pvalue(us) > 0.001);
    CHECK(ks_uniform_pvalue(vs) > 0.001);

    // antithetic coupling pins u + v to 1 on a single atom
    for (const auto& p : interpolating_sample(J, RandomizationScheme::antithetic, 500, 7))
        CHECK(std::fabs(p.u + p.v - 1.0) <= 1e-15);
}

TEST_CASE("samples are reproducible and range-concatenable") {
    auto J = worked_example();
    auto a = interpolating_sample(J, RandomizationScheme::shared, 200, 42);
    auto b = interpolating_sample(J, RandomizationScheme::shared, 200, 42);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].u == b[i].u);
        CHECK(a[i].v == b[i].v);
    }
    // a longer run starts with the shorter one
    auto c = interpolating_sample(J, RandomizationScheme::shared, 400, 42);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(c[i].u == a[i].u);

    auto d = interpolating_sample(J, RandomizationScheme::shared, 200, 43);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) differs |= a[i].u != d[i].u;
    CHECK(differs);
}

TEST_CASE("marginal uniformity for every scheme") {
    RandomStream rs(31);
    auto J = random_joint(rs, 4, 4, 0.2);
    for (auto scheme : {RandomizationScheme::shared,
                        RandomizationScheme::independent_per_atom,
                        RandomizationScheme::antithetic}) {
        auto s = interpolating_sample(J, scheme, 100000, 5);
        std::vector<double> us, vs;
        for (const auto& p : s) {
            us.push_back(p.u);
            vs.push_back(p.v);
        }
        CHECK(ks_uniform_pvalue(us) > 0.001);
        CHECK(ks_uniform_pvalue(vs) > 0.001);
    }
}

TEST_CASE("shared scheme reproduces the checkerboard cdf") {
    auto J = worked_example();
    GridCopula cb = checkerboard(J);
    const std::size_t n = 100000;
    auto s = interpolating_sample(J, RandomizationScheme::shared, n, 424242);
    for (double u : {0.25, 0.5, 0.75})
        for (double v : {0.25, 0.5, 0.75}) {
            double expect = cb.cdf(u, v);
            double se = std::sqrt(expect * (1.0 - expect) / n);
            CHECK(std::fabs(empirical_cdf(s, u, v) - expect) <= 3.0 * se + 1e-12);
        }
}

TEST_CASE("independent-per-atom scheme has the same 2d law as the checkerboard") {
    // with univariate coordinates only one atom is realized per draw, so
    // decoupling the per-atom uniforms cannot change the joint law
    auto J = worked_example();
    GridCopula cb = checkerboard(J);
    const std::size_t n = 100000;
    auto s = interpolating_sample(J, RandomizationScheme::independent_per_atom, n, 7);
    for (double u : {0.25, 0.5, 0.75})
        for (double v : {0.25, 0.5, 0.75}) {
            double expect = cb.cdf(u, v);
            double se = std::sqrt(expect * (1.0 - expect) / n);
            CHECK(std::fabs(empirical_cdf(s, u, v) - expect) <= 3.5 * se + 1e-12);
        }
}

TEST_CASE("antithetic scheme matches its closed-form cdf") {
    auto J = worked_example();
    const std::size_t n = 100000;
    auto s = interpolating_sample(J, RandomizationScheme::antithetic, n, 424242);
    for (double u : {0.25, 0.5, 0.75})
        for (double v : {0.25, 0.5, 0.75}) {
            double expect = oracles::antithetic_bernoulli_cdf(0.5, 0.5, 5.0 / 16.0, u, v);
            double se = std::sqrt(expect * (1.0 - expect) / n);
            CHECK(std::fabs(empirical_cdf(s, u, v) - expect) <= 3.0 * se + 1e-12);
        }

    // and it genuinely differs from the checkerboard at (1/4, 1/4):
    // C_cb = 5/64 > 0 while the antithetic copula vanishes there
    GridCopula cb = checkerboard(J);
    CHECK(cb.cdf(0.25, 0.25) == doctest::Approx(5.0 / 64.0));
    CHECK(oracles::antithetic_bernoulli_cdf(0.5, 0.5, 5.0 / 16.0, 0.25, 0.25) == 0.0);
    CHECK(empirical_cdf(s, 0.25, 0.25) == 0.0);
}

TEST_CASE("scheme names parse") {
    CHECK(scheme_from_name("shared") == RandomizationScheme::shared);
    CHECK(scheme_from_name("independent") == RandomizationScheme::independent_per_atom);
    CHECK(scheme_from_name("antithetic") == RandomizationScheme::antithetic);
    CHECK_THROWS_AS(scheme_from_name("other"), Error);
    CHECK(std::string(scheme_name(RandomizationScheme::shared)) == "shared");
}
