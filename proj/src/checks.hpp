#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "csiszar.hpp"
#include "copulas.hpp"
#include "rng.hpp"

namespace divkit {

/// Randomized property suites behind `divkit check`. Every suite is
/// deterministic in (trials, seed); violations carry the offending inputs
/// as re-runnable JSON.
struct SuiteReport {
    std::string suite;
    unsigned trials = 0;
    std::vector<nlohmann::json> violations;
    nlohmann::json details = nlohmann::json::object();

    bool passed() const { return violations.empty(); }
};

const std::vector<std::string>& check_suite_names();

SuiteReport run_check_suite(const std::string& suite, unsigned trials, std::uint64_t seed);

// ---- corpus helpers (also used by the test binaries) ----

/// Random distribution over `support` labels "a0", "a1", ...; each mass may
/// be zeroed with probability zero_prob (at least one stays positive).
DiscreteDistribution random_distribution(RandomStream& rs, std::size_t support,
                                         double zero_prob = 0.0);

JointDistribution random_joint(RandomStream& rs, std::size_t max_rows, std::size_t max_cols,
                               double zero_prob = 0.0);

StochasticKernel random_kernel(RandomStream& rs, const std::vector<std::string>& sources,
                               std::size_t targets);

/// Uniformly drawn generator from the built-in catalog (alpha gets a random
/// parameter in [-1, 2]).
Generator random_generator(RandomStream& rs);

/// The worked 2x2 example: P(X=1)=p, P(Y=1)=q, P(X=1,Y=1)=r over labels
/// {"0","1"}.
JointDistribution bernoulli_pair_joint(double p, double q, double r);

/// Random legal grid refinement of checkerboard(J): each atom cell is split
/// k x k and its mass redistributed by a doubly stochastic perturbation, so
/// coarse masses and uniform marginals are preserved exactly.
GridCopula random_refinement(RandomStream& rs, const JointDistribution& J, std::size_t k);

/// Two-sided Kolmogorov-Smirnov p-value (asymptotic) of a sample against
/// the uniform law on [0,1].
double ks_uniform_pvalue(std::vector<double> sample);

} // namespace divkit
