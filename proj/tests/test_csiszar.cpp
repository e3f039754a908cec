#include <doctest.h>

#include <cmath>

#include "checks.hpp"
#include "csiszar.hpp"
#include "oracles.hpp"

using namespace divkit;

TEST_CASE("independent joints score zero") {
    // dyadic product: ratios are exactly 1, so the index is exactly 0
    DiscreteDistribution half({{"0", 0.5}, {"1", 0.5}});
    auto J = product(half, half);
    for (const char* n : {"kl", "tv", "pearson", "js"}) {
        CsiszarResult r = csiszar_index(J, builtin(n));
        CHECK(r.value.value() == 0.0);
        CHECK(r.via_conditionals.value() == 0.0);
    }

    RandomStream rs(1);
    for (int t = 0; t < 100; ++t) {
        auto P = random_distribution(rs, 1 + rs.integer(4), 0.0);
        auto Q = random_distribution(rs, 1 + rs.integer(4), 0.0);
        CsiszarResult r = csiszar_index(product(P, Q), random_generator(rs));
        CHECK(r.value.is_finite());
        CHECK(std::fabs(r.value.value()) <= 1e-12);
    }
}

TEST_CASE("worked Bernoulli example: 1/15 under Pearson") {
    auto J = bernoulli_pair_joint(0.5, 0.5, 5.0 / 16.0);
    CsiszarResult r = csiszar_index(J, builtin("pearson"));
    CHECK(r.value.value() == doctest::Approx(1.0 / 15.0).epsilon(1e-13));
    CHECK(std::fabs(r.value.value() - 1.0 / 15.0) <= 1e-12);
    CHECK(approx_equal(r.via_joint, r.via_conditionals, 1e-12));
    CHECK(r.value.value() ==
          doctest::Approx(oracles::bernoulli_pearson_closed_form(0.5, 0.5, 5.0 / 16.0))
              .epsilon(1e-13));
}

TEST_CASE("four-term Bernoulli formula over random admissible triples") {
    RandomStream rs(2);
    for (int t = 0; t < 300; ++t) {
        double p = rs.uniform(0.05, 0.95), q = rs.uniform(0.05, 0.95);
        double lo = std::max(p + q - 1.0, 0.0), hi = std::min(p, q);
        double r = lo + (hi - lo) * rs.uniform(0.05, 0.95);
        Generator g = random_generator(rs);
        double expect = oracles::bernoulli_index(p, q, r, g);
        ExtReal got = csiszar_index(bernoulli_pair_joint(p, q, r), g).value;
        REQUIRE(got.is_finite());
        CHECK(got.value() == doctest::Approx(expect).epsilon(1e-11));
        // Pearson additionally has the rational closed form
        ExtReal pearson = csiszar_index(bernoulli_pair_joint(p, q, r), builtin("pearson")).value;
        CHECK(pearson.value() ==
              doctest::Approx(oracles::bernoulli_pearson_closed_form(p, q, r))
                  .epsilon(1e-10));
    }
}

TEST_CASE("mutual information") {
    DiscreteDistribution half({{"0", 0.5}, {"1", 0.5}});
    CHECK(mutual_information(product(half, half)) == 0.0);

    JointDistribution diag({"a", "b"}, {"a", "b"}, {{0.5, 0.0}, {0.0, 0.5}});
    CHECK(mutual_information(diag) == doctest::Approx(std::log(2.0)).epsilon(1e-15));

    auto J = bernoulli_pair_joint(0.5, 0.5, 5.0 / 16.0);
    CHECK(mutual_information(J) ==
          doctest::Approx(csiszar_index(J, builtin("kl-star")).value.value())
              .epsilon(1e-12));

    RandomStream rs(3);
    for (int t = 0; t < 200; ++t) {
        auto R = random_joint(rs, 5, 5, 0.2);
        CHECK(approx_equal(csiszar_index(R, builtin("kl-star")).value,
                           ExtReal(mutual_information(R)), 1e-10));
    }
}

TEST_CASE("coordinatewise transformations reduce the index") {
    auto J = bernoulli_pair_joint(0.5, 0.5, 5.0 / 16.0);
    auto identity = [](const std::string& l) { return l; };

    TransformResult same = transform_reduces(J, identity, identity, builtin("pearson"));
    CHECK(same.before == same.after);

    // injective relabelings leave the index unchanged
    auto rename = [](const std::string& l) { return "relabeled-" + l; };
    TransformResult inj = transform_reduces(J, rename, rename, builtin("kl"));
    CHECK(inj.before == inj.after);

    // collapsing a coordinate to a constant destroys all dependence
    auto constant = [](const std::string&) { return std::string("c"); };
    TransformResult flat = transform_reduces(J, constant, constant, builtin("pearson"));
    CHECK(flat.after.value() == 0.0);
    CHECK(flat.holds);

    // random corpus
    RandomStream rs(4);
    for (int t = 0; t < 200; ++t) {
        auto R = random_joint(rs, 4, 4, 0.1);
        std::size_t gx = 1 + rs.integer(R.rows()), gy = 1 + rs.integer(R.cols());
        std::vector<std::size_t> ax(R.rows()), ay(R.cols());
        for (auto& a : ax) a = rs.integer(gx);
        for (auto& a : ay) a = rs.integer(gy);
        auto phi_x = [&](const std::string& l) {
            return "u" + std::to_string(ax[std::stoul(l.substr(1))]);
        };
        auto phi_y = [&](const std::string& l) {
            return "v" + std::to_string(ay[std::stoul(l.substr(1))]);
        };
        CHECK(transform_reduces(R, phi_x, phi_y, random_generator(rs)).holds);
    }

    // marginal invariance: joints symmetric under simultaneous sign flips
    // stay put under coordinatewise absolute values
    std::vector<std::string> labels{"-2", "-1", "1", "2"};
    RandomStream rs2(5);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::vector<double>> pmf(4, std::vector<double>(4));
        double total = 0.0;
        // build a sign-flip symmetric table: m(i,j) = m(3-i, 3-j)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                if (4 * i + j <= 4 * (3 - i) + (3 - j)) {
                    double m = -std::log(rs2.uniform_oc());
                    pmf[i][j] = m;
                    pmf[3 - i][3 - j] = m;
                }
            }
        for (auto& row : pmf)
            for (double& c : row) total += c;
        for (auto& row : pmf)
            for (double& c : row) c /= total;
        JointDistribution S(labels, labels, pmf);
        auto abs_map = [](const std::string& l) {
            return l[0] == '-' ? l.substr(1) : l;
        };
        TransformResult r = transform_reduces(S, abs_map, abs_map, random_generator(rs2));
        CHECK(approx_equal_rel(r.after, r.before, 1e-10));
    }
}

TEST_CASE("markov chains never gain dependence") {
    auto J = bernoulli_pair_joint(0.5, 0.5, 5.0 / 16.0);

    MarkovMonotonicity id = markov_chain_monotonicity(
        J, StochasticKernel::identity(J.y_labels()), builtin("pearson"));
    CHECK(id.s_xy == id.s_xz);

    StochasticKernel constant({"0", "1"}, {"z"}, {{1.0}, {1.0}});
    MarkovMonotonicity cut = markov_chain_monotonicity(J, constant, builtin("pearson"));
    CHECK(cut.s_xz.value() == 0.0);

    RandomStream rs(6);
    for (int t = 0; t < 200; ++t) {
        auto R = random_joint(rs, 2, 2, 0.0);
        auto K = random_kernel(rs, R.y_labels(), 3);
        Generator g = random_generator(rs);
        MarkovMonotonicity m = markov_chain_monotonicity(R, K, g);
        CHECK(m.holds);
        // brute-force joint over (X, Z)
        std::vector<std::vector<double>> xz(R.rows(), std::vector<double>(3, 0.0));
        for (std::size_t i = 0; i < R.rows(); ++i)
            for (std::size_t j = 0; j < R.cols(); ++j)
                for (std::size_t k = 0; k < 3; ++k)
                    xz[i][k] += R.pmf(i, j) * K.at(j, k);
        JointDistribution direct(R.x_labels(), K.target_labels(), xz);
        CHECK(approx_equal_rel(csiszar_index(direct, g).value, m.s_xz, 1e-12));
    }
}

TEST_CASE("forgetting an independent coordinate") {
    auto J = bernoulli_pair_joint(0.5, 0.5, 5.0 / 16.0);

    AugmentationResult point =
        independent_augmentation_check(J, DiscreteDistribution::point_mass("u"),
                                       builtin("pearson"));
    CHECK(point.holds_equal);

    DiscreteDistribution u2({{"u", 0.5}, {"w", 0.5}});
    AugmentationResult two = independent_augmentation_check(J, u2, builtin("pearson"));
    CHECK(two.holds_equal);
    CHECK(two.s_aug.value() == doctest::Approx(two.s_base.value()).epsilon(1e-12));

    DiscreteDistribution half({{"0", 0.5}, {"1", 0.5}});
    AugmentationResult indep =
        independent_augmentation_check(product(half, half), u2, builtin("kl"));
    CHECK(indep.s_base.value() == 0.0);
    CHECK(std::fabs(indep.s_aug.value()) <= 1e-14);

    RandomStream rs(7);
    for (int t = 0; t < 100; ++t) {
        auto R = random_joint(rs, 3, 3, 0.0);
        auto PU = random_distribution(rs, 1 + rs.integer(3), 0.0);
        CHECK(independent_augmentation_check(R, PU, random_generator(rs)).holds_equal);
    }
}

TEST_CASE("symmetry and the conditional representation") {
    RandomStream rs(8);
    for (int t = 0; t < 200; ++t) {
        auto J = random_joint(rs, 5, 5, 0.15);
        Generator g = random_generator(rs);
        CHECK(approx_equal_rel(csiszar_index(J, g).value,
                               csiszar_index(J.transposed(), g).value, 1e-12));

        bool positive_rows = true;
        for (std::size_t i = 0; i < J.rows(); ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < J.cols(); ++j) s += J.pmf(i, j);
            positive_rows &= s > 0.0;
        }
        if (positive_rows) {
            CsiszarResult r = csiszar_index(J, g);
            CHECK(approx_equal_rel(r.via_joint, r.via_conditionals, 1e-10));
        }
    }

    // degenerate marginals are legal and independent of everything
    JointDistribution degenerate({"only"}, {"a", "b"}, {{0.4, 0.6}});
    CHECK(csiszar_index(degenerate, builtin("kl")).value.value() == 0.0);
}
