#include <doctest.h>

#include <cmath>

#include "checks.hpp"
#include "measures.hpp"
#include "rng.hpp"

using namespace divkit;

namespace {

DiscreteDistribution bernoulli(double p1) {
    return DiscreteDistribution({{"0", 1.0 - p1}, {"1", p1}});
}

} // namespace

TEST_CASE("distribution validation") {
    CHECK_THROWS_AS(DiscreteDistribution({{"a", 0.5}, {"b", 0.6}}), Error);   // sum 1.1
    CHECK_THROWS_AS(DiscreteDistribution({{"a", -0.1}, {"b", 1.1}}), Error);  // negative
    CHECK_THROWS_AS(DiscreteDistribution({{"a", 0.5}, {"a", 0.5}}), Error);   // dup label

    // drift below 1e-9 renormalizes to an exact unit total
    DiscreteDistribution d({{"a", 0.25 + 2e-10}, {"b", 0.75}});
    CHECK(d.mass(0) + d.mass(1) == 1.0);

    // zero-mass atoms are legal
    DiscreteDistribution z({{"a", 1.0}, {"b", 0.0}});
    CHECK(z.size() == 2);
}

TEST_CASE("align") {
    auto da = DiscreteDistribution::point_mass("a");
    auto db = DiscreteDistribution::point_mass("b");

    DensityPair same = align(da, da);
    CHECK(same.labels.size() == 1);
    CHECK(same.p[0] == 1.0);
    CHECK(same.q[0] == 1.0);
    CHECK(same.classes[0] == SupportClass::both_positive);

    DensityPair disjoint = align(da, db);
    CHECK(disjoint.labels == std::vector<std::string>{"a", "b"});
    CHECK(disjoint.classes[0] == SupportClass::p_only);
    CHECK(disjoint.classes[1] == SupportClass::q_only);

    DensityPair ber = align(bernoulli(0.5), bernoulli(0.25));
    CHECK(ber.p == std::vector<double>{0.5, 0.5});
    CHECK(ber.q == std::vector<double>{0.75, 0.25});
    for (auto c : ber.classes) CHECK(c == SupportClass::both_positive);

    // symmetry: swapping the arguments swaps p and q
    DensityPair ab = align(bernoulli(0.3), bernoulli(0.8));
    DensityPair ba = align(bernoulli(0.8), bernoulli(0.3));
    CHECK(ab.labels == ba.labels);
    CHECK(ab.p == ba.q);
    CHECK(ab.q == ba.p);
}

TEST_CASE("pushforward by a map") {
    auto identity = [](const std::string& l) { return l; };
    DiscreteDistribution u2({{"-1", 0.5}, {"1", 0.5}});
    auto same = pushforward_map(u2, identity);
    CHECK(same.atoms().size() == 2);
    CHECK(same.mass(0) == 0.5);

    // |.| collapses a symmetric two-point law to a point mass
    auto abs_map = [](const std::string& l) { return l == "-1" ? "1" : l; };
    auto collapsed = pushforward_map(u2, abs_map);
    CHECK(collapsed.size() == 1);
    CHECK(collapsed.mass(0) == 1.0);

    DiscreteDistribution u4(
        {{"1", 0.25}, {"2", 0.25}, {"3", 0.25}, {"4", 0.25}});
    auto parity = [](const std::string& l) {
        return std::stoi(l) % 2 == 0 ? "even" : "odd";
    };
    auto par = pushforward_map(u4, parity);
    CHECK(par.size() == 2);
    CHECK(par.mass(0) == 0.5);
    CHECK(par.mass(1) == 0.5);

    // total mass preserved and composition law respected
    RandomStream rs(11);
    for (int t = 0; t < 200; ++t) {
        auto P = random_distribution(rs, 1 + rs.integer(7), 0.2);
        auto phi = [](const std::string& l) {
            return std::string("f") + std::to_string((l.back() - '0') / 2);
        };
        auto psi = [](const std::string& l) {
            return std::string(l.size() > 1 && l[1] <= '1' ? "lo" : "hi");
        };
        auto one = pushforward_map(pushforward_map(P, phi), psi);
        auto two = pushforward_map(P, [&](const std::string& l) { return psi(phi(l)); });
        double total = 0.0;
        REQUIRE(one.size() == two.size());
        for (std::size_t i = 0; i < one.size(); ++i) {
            CHECK(one.label(i) == two.label(i));
            CHECK(one.mass(i) == doctest::Approx(two.mass(i)).epsilon(1e-12));
            total += one.mass(i);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("pushforward through a kernel") {
    auto P = bernoulli(0.5);
    auto same = pushforward_kernel(P, StochasticKernel::identity({"0", "1"}));
    CHECK(same.mass(0) == 0.5);

    StochasticKernel constant({"0", "1"}, {"a", "b"}, {{0.3, 0.7}, {0.3, 0.7}});
    auto pushed = pushforward_kernel(P, constant);
    CHECK(pushed.mass(0) == doctest::Approx(0.3));
    CHECK(pushed.mass(1) == doctest::Approx(0.7));

    StochasticKernel k({"0", "1"}, {"a", "b"}, {{0.9, 0.1}, {0.2, 0.8}});
    auto row = pushforward_kernel(DiscreteDistribution({{"0", 1.0}, {"1", 0.0}}), k);
    CHECK(row.mass(0) == 0.9);
    CHECK(row.mass(1) == doctest::Approx(0.1));

    CHECK_THROWS_AS(pushforward_kernel(DiscreteDistribution::point_mass("zz"), k), Error);
}

TEST_CASE("product and marginals") {
    auto single = product(DiscreteDistribution::point_mass("a"),
                          DiscreteDistribution::point_mass("b"));
    CHECK(single.pmf(0, 0) == 1.0);

    auto quarters = product(bernoulli(0.5), bernoulli(0.5));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(quarters.pmf(i, j) == 0.25);

    auto mixed = product(bernoulli(0.5), bernoulli(0.25));
    CHECK(mixed.pmf(0, 0) == 0.375);
    CHECK(mixed.pmf(0, 1) == 0.125);
    CHECK(mixed.pmf(1, 0) == 0.375);
    CHECK(mixed.pmf(1, 1) == 0.125);

    // marginals of a product give back the factors exactly
    auto [mx, my] = marginals(mixed);
    CHECK(mx.mass(0) == 0.5);
    CHECK(mx.mass(1) == 0.5);
    CHECK(my.mass(0) == 0.75);
    CHECK(my.mass(1) == 0.25);

    // the worked Bernoulli joint has Ber(1/2) marginals
    auto [bx, by] = marginals(bernoulli_pair_joint(0.5, 0.5, 5.0 / 16.0));
    CHECK(bx.mass(1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(by.mass(1) == doctest::Approx(0.5).epsilon(1e-15));

    // random joints against an independent loop oracle
    RandomStream rs(3);
    for (int t = 0; t < 100; ++t) {
        auto J = random_joint(rs, 4, 5, 0.2);
        auto [px, py] = marginals(J);
        for (std::size_t i = 0; i < J.rows(); ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < J.cols(); ++j) s += J.pmf(i, j);
            CHECK(px.mass(i) == doctest::Approx(s).epsilon(1e-14));
        }
        for (std::size_t j = 0; j < J.cols(); ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < J.rows(); ++i) s += J.pmf(i, j);
            CHECK(py.mass(j) == doctest::Approx(s).epsilon(1e-14));
        }
    }
}

TEST_CASE("conditionals") {
    auto indep = product(bernoulli(0.3), bernoulli(0.25));
    ConditionalKernel c = conditionals(indep);
    for (std::size_t i = 0; i < 2; ++i) {
        REQUIRE(c.defined[i]);
        CHECK(c.rows[i][0] == doctest::Approx(0.75));
        CHECK(c.rows[i][1] == doctest::Approx(0.25));
    }

    // worked example: row for X=1 is ((p-r)/p, r/p) = (3/8, 5/8)
    auto J = bernoulli_pair_joint(0.5, 0.5, 5.0 / 16.0);
    ConditionalKernel cj = conditionals(J);
    CHECK(cj.rows[1][0] == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
    CHECK(cj.rows[1][1] == doctest::Approx(5.0 / 8.0).epsilon(1e-15));

    // deterministic diagonal coupling gives the identity kernel
    JointDistribution diag({"a", "b"}, {"a", "b"}, {{0.5, 0.0}, {0.0, 0.5}});
    ConditionalKernel cd = conditionals(diag);
    CHECK(cd.rows[0][0] == 1.0);
    CHECK(cd.rows[1][1] == 1.0);

    // zero-mass rows are flagged, not fabricated
    JointDistribution hole({"a", "b"}, {"u", "v"}, {{0.6, 0.4}, {0.0, 0.0}});
    ConditionalKernel ch = conditionals(hole);
    CHECK(ch.defined[0]);
    CHECK_FALSE(ch.defined[1]);
    CHECK_THROWS_AS(ch.kernel(), Error);

    // reconstruction: P_X(x) K(x,y) returns the joint on defined rows
    RandomStream rs(5);
    for (int t = 0; t < 100; ++t) {
        auto R = random_joint(rs, 4, 4, 0.2);
        auto [px, py] = marginals(R);
        ConditionalKernel k = conditionals(R);
        for (std::size_t i = 0; i < R.rows(); ++i) {
            if (!k.defined[i]) continue;
            for (std::size_t j = 0; j < R.cols(); ++j)
                CHECK(px.mass(i) * k.rows[i][j] ==
                      doctest::Approx(R.pmf(i, j)).epsilon(1e-12));
        }
    }
}

TEST_CASE("markov composition") {
    auto J = bernoulli_pair_joint(0.4, 0.3, 0.2);

    auto same = markov_compose(J, StochasticKernel::identity(J.y_labels()));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(same.pmf(i, j) == J.pmf(i, j));

    // constant-row kernel makes Z independent with law rho
    StochasticKernel constant({"0", "1"}, {"z0", "z1"}, {{0.6, 0.4}, {0.6, 0.4}});
    auto indep = markov_compose(J, constant);
    auto [jx, jy] = marginals(J);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(indep.pmf(i, 0) == doctest::Approx(jx.mass(i) * 0.6).epsilon(1e-14));
        CHECK(indep.pmf(i, 1) == doctest::Approx(jx.mass(i) * 0.4).epsilon(1e-14));
    }

    // brute-force triple-loop oracle on random inputs
    RandomStream rs(9);
    for (int t = 0; t < 100; ++t) {
        auto R = random_joint(rs, 3, 3, 0.0);
        auto K = random_kernel(rs, R.y_labels(), 3);
        auto composed = markov_compose(R, K);
        auto [rx, ry] = marginals(R);
        auto [cx, cy] = marginals(composed);
        for (std::size_t i = 0; i < R.rows(); ++i) {
            CHECK(cx.mass(i) == doctest::Approx(rx.mass(i)).epsilon(1e-12));
            for (std::size_t k = 0; k < K.targets(); ++k) {
                double expect = 0.0;
                for (std::size_t j = 0; j < R.cols(); ++j)
                    expect += R.pmf(i, j) * K.at(j, k);
                CHECK(composed.pmf(i, k) == doctest::Approx(expect).epsilon(1e-13));
            }
        }
    }

    CHECK_THROWS_AS(
        markov_compose(J, StochasticKernel::identity({"bad", "labels"})), Error);
}
