#include "checks.hpp"

#include <algorithm>
#include <cmath>

#include "json_io.hpp"

namespace divkit {

namespace {

using nlohmann::json;

const double kIdentityTol = 1e-12;  // algebraic identities
const double kTheoremTol = 1e-10;   // theorem-level comparisons

std::vector<std::string> make_labels(const char* stem, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

json generator_json(const Generator& g) { return g.name(); }

json ext_json(ExtReal v) { return ext_real_to_json(v); }

bool record(SuiteReport& rep, json violation) {
    rep.violations.push_back(std::move(violation));
    return rep.violations.size() >= 5;  // enough counterexamples, stop the suite
}

} // namespace

DiscreteDistribution random_distribution(RandomStream& rs, std::size_t support,
                                         double zero_prob) {
    std::vector<Atom> atoms;
    std::vector<std::string> labels = make_labels("a", support);
    while (true) {
        atoms.clear();
        bool any_positive = false;
        for (std::size_t i = 0; i < support; ++i) {
            double m = rs.flip(zero_prob) ? 0.0 : -std::log(rs.uniform_oc());
            any_positive |= m > 0.0;
            atoms.push_back({labels[i], m});
        }
        if (!any_positive) continue;
        double total = 0.0;
        for (const auto& a : atoms) total += a.mass;
        for (auto& a : atoms) a.mass /= total;
        return DiscreteDistribution(std::move(atoms));
    }
}

JointDistribution random_joint(RandomStream& rs, std::size_t max_rows, std::size_t max_cols,
                               double zero_prob) {
    std::size_t m = 1 + rs.integer(max_rows), n = 1 + rs.integer(max_cols);
    while (true) {
        std::vector<std::vector<double>> pmf(m, std::vector<double>(n));
        double total = 0.0;
        for (auto& row : pmf)
            for (double& c : row) {
                c = rs.flip(zero_prob) ? 0.0 : -std::log(rs.uniform_oc());
                total += c;
            }
        if (total == 0.0) continue;
        for (auto& row : pmf)
            for (double& c : row) c /= total;
        return JointDistribution(make_labels("x", m), make_labels("y", n), std::move(pmf));
    }
}

StochasticKernel random_kernel(RandomStream& rs, const std::vector<std::string>& sources,
                               std::size_t targets) {
    std::vector<std::vector<double>> rows(sources.size(), std::vector<double>(targets));
    for (auto& row : rows) {
        double total = 0.0;
        for (double& c : row) {
            c = -std::log(rs.uniform_oc());
            total += c;
        }
        for (double& c : row) c /= total;
    }
    return StochasticKernel(sources, make_labels("z", targets), std::move(rows));
}

Generator random_generator(RandomStream& rs) {
    switch (rs.integer(9)) {
        case 0: return builtin("kl");
        case 1: return builtin("kl-star");
        case 2: return builtin("tv");
        case 3: return builtin("hellinger");
        case 4: return builtin("pearson");
        case 5: return builtin("neyman");
        case 6: return builtin("lecam");
        case 7: return builtin("js");
        default: return builtin("alpha", rs.uniform(-1.0, 2.0));
    }
}

JointDistribution bernoulli_pair_joint(double p, double q, double r) {
    double rho = 1.0 - p - q + r;
    return JointDistribution({"0", "1"}, {"0", "1"}, {{rho, q - r}, {p - r, r}});
}

GridCopula random_refinement(RandomStream& rs, const JointDistribution& J, std::size_t k) {
    GridCopula cb = checkerboard(J);
    std::size_t m = cb.rows(), n = cb.cols();

    std::vector<double> ul, vl;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t s = 0; s < k; ++s) ul.push_back(cb.u_length(i) / k);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t < k; ++t) vl.push_back(cb.v_length(j) / k);

    std::vector<std::vector<double>> mass(m * k, std::vector<double>(n * k, 0.0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // local doubly stochastic split: uniform blended with a random
            // permutation, which keeps row and column sums at 1/k exactly
            double w = rs.uniform(0.0, 0.9);
            std::vector<std::size_t> perm(k);
            for (std::size_t s = 0; s < k; ++s) perm[s] = s;
            for (std::size_t s = k; s > 1; --s)
                std::swap(perm[s - 1], perm[rs.integer(s)]);
            for (std::size_t s = 0; s < k; ++s)
                for (std::size_t t = 0; t < k; ++t) {
                    double local = (1.0 - w) / (k * k) + (perm[s] == t ? w / k : 0.0);
                    mass[i * k + s][j * k + t] = cb.mass(i, j) * local;
                }
        }
    return GridCopula(std::move(ul), std::move(vl), std::move(mass));
}

double ks_uniform_pvalue(std::vector<double> sample) {
    std::sort(sample.begin(), sample.end());
    double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        d = std::max(d, (i + 1) / n - sample[i]);
        d = std::max(d, sample[i] - i / n);
    }
    double lambda = (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n)) * d;
    double p = 0.0;
    for (int j = 1; j <= 101; ++j) {
        double term = 2.0 * std::exp(-2.0 * j * j * lambda * lambda);
        p += (j % 2 == 1) ? term : -term;
        if (term < 1e-12) break;
    }
    return std::clamp(p, 0.0, 1.0);
}

namespace {

// ---------------- individual suites ----------------

SuiteReport suite_duality(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"duality", trials, {}, json::object()};
    RandomStream rs(seed);
    for (unsigned t = 0; t < trials; ++t) {
        auto P = random_distribution(rs, 1 + rs.integer(6), 0.2);
        auto Q = random_distribution(rs, 1 + rs.integer(6), 0.2);
        Generator g = random_generator(rs);
        ExtReal lhs = f_divergence(P, Q, g).value;
        ExtReal rhs = f_divergence(Q, P, conjugate(g)).value;
        if (!approx_equal_rel(lhs, rhs, kIdentityTol)) {
            if (record(rep, {{"trial", t}, {"p", to_json(P)}, {"q", to_json(Q)},
                             {"f", generator_json(g)}, {"lhs", ext_json(lhs)},
                             {"rhs", ext_json(rhs)}}))
                break;
        }
    }
    return rep;
}

SuiteReport suite_affine(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"affine", trials, {}, json::object()};
    RandomStream rs(seed);
    for (unsigned t = 0; t < trials; ++t) {
        auto P = random_distribution(rs, 1 + rs.integer(6), 0.2);
        auto Q = random_distribution(rs, 1 + rs.integer(6), 0.2);
        Generator g = random_generator(rs);
        double c = rs.uniform(-5.0, 5.0);
        ExtReal base = f_divergence(P, Q, g).value;
        ExtReal shifted = f_divergence(P, Q, affine_shift(g, c)).value;
        if (!approx_equal_rel(base, shifted, kIdentityTol)) {
            if (record(rep, {{"trial", t}, {"p", to_json(P)}, {"q", to_json(Q)},
                             {"f", generator_json(g)}, {"c", c},
                             {"base", ext_json(base)}, {"shifted", ext_json(shifted)}}))
                break;
        }
    }
    return rep;
}

SuiteReport suite_conjugate(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"conjugate", trials, {}, json::object()};
    RandomStream rs(seed);
    for (unsigned t = 0; t < trials; ++t) {
        Generator g = random_generator(rs);
        Generator gcc = conjugate(conjugate(g));
        // log-spaced grid over (1e-3, 1e3)
        for (int k = 0; k <= 60; ++k) {
            double x = std::pow(10.0, -3.0 + k * 0.1);
            double a = g(x), b = gcc(x);
            double tol = (x >= 0.1 && x <= 10.0) ? kIdentityTol
                                                 : 1e-9 * std::max(1.0, std::fabs(a));
            if (std::fabs(a - b) > tol) {
                if (record(rep, {{"trial", t}, {"f", generator_json(g)}, {"t", x},
                                 {"f(t)", a}, {"f**(t)", b}}))
                    return rep;
                break;
            }
        }
        // the boundary limits swap back too
        if (!approx_equal(gcc.at_zero(), g.at_zero(), kIdentityTol) ||
            !approx_equal(gcc.conj_at_zero(), g.conj_at_zero(), kIdentityTol)) {
            if (record(rep, {{"trial", t}, {"f", generator_json(g)},
                             {"issue", "boundary limits not involutive"}}))
                break;
        }
        if (!approx_equal(sup_bound(g), sup_bound(conjugate(g)), kIdentityTol)) {
            if (record(rep, {{"trial", t}, {"f", generator_json(g)},
                             {"issue", "sup bound not conjugation symmetric"}}))
                break;
        }
    }
    return rep;
}

SuiteReport suite_nonnegativity(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"nonnegativity", trials, {}, json::object()};
    RandomStream rs(seed);
    for (unsigned t = 0; t < trials; ++t) {
        std::size_t support = 1 + rs.integer(6);
        auto P = random_distribution(rs, support, 0.2);
        auto Q = random_distribution(rs, support, 0.2);
        Generator g = random_generator(rs);
        ExtReal v = f_divergence(P, Q, g).value;
        if (v < ExtReal(-kIdentityTol)) {
            if (record(rep, {{"trial", t}, {"p", to_json(P)}, {"q", to_json(Q)},
                             {"f", generator_json(g)}, {"value", ext_json(v)},
                             {"issue", "negative divergence"}}))
                break;
            continue;
        }
        // D = 0 forces P = Q for generators strictly convex at 1
        if (g.strictly_convex_at_one() && v.is_finite() && v.value() <= kIdentityTol) {
            DensityPair d = align(P, Q);
            double dev = 0.0;
            for (std::size_t i = 0; i < d.labels.size(); ++i)
                dev = std::max(dev, std::fabs(d.p[i] - d.q[i]));
            if (dev > 1e-9) {
                if (record(rep, {{"trial", t}, {"p", to_json(P)}, {"q", to_json(Q)},
                                 {"f", generator_json(g)}, {"value", ext_json(v)},
                                 {"max_deviation", dev},
                                 {"issue", "zero divergence for distinct laws"}}))
                    break;
            }
        }
        // identical inputs give exactly zero
        ExtReal self = f_divergence(P, P, g).value;
        if (!(self == ExtReal(0.0))) {
            if (record(rep, {{"trial", t}, {"p", to_json(P)}, {"f", generator_json(g)},
                             {"self", ext_json(self)}, {"issue", "D(P||P) != 0"}}))
                break;
        }
    }
    return rep;
}

SuiteReport suite_supremum(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"supremum", trials, {}, json::object()};
    RandomStream rs(seed);
    for (unsigned t = 0; t < trials; ++t) {
        Generator g = random_generator(rs);
        ExtReal bound = sup_bound(g);

        auto P = random_distribution(rs, 1 + rs.integer(6), 0.2);
        auto Q = random_distribution(rs, 1 + rs.integer(6), 0.2);
        ExtReal v = f_divergence(P, Q, g).value;
        if (!leq_with_tol(v, bound, kTheoremTol)) {
            if (record(rep, {{"trial", t}, {"p", to_json(P)}, {"q", to_json(Q)},
                             {"f", generator_json(g)}, {"value", ext_json(v)},
                             {"bound", ext_json(bound)}, {"issue", "value above sup"}}))
                break;
            continue;
        }
        // attaining the (finite positive) bound forces mutual singularity
        if (bound.is_finite() && bound.value() > 0.0 && v.is_finite() &&
            std::fabs(v.value() - bound.value()) <= kTheoremTol) {
            DensityPair d = align(P, Q);
            bool overlap = false;
            for (auto c : d.classes) overlap |= c == SupportClass::both_positive;
            if (overlap) {
                if (record(rep, {{"trial", t}, {"p", to_json(P)}, {"q", to_json(Q)},
                                 {"f", generator_json(g)},
                                 {"issue", "bound attained by non-singular pair"}}))
                    break;
            }
        }

        // mutually singular pairs attain the bound
        auto Ps = random_distribution(rs, 1 + rs.integer(3), 0.0);
        std::vector<Atom> shifted;
        for (const auto& a : random_distribution(rs, 1 + rs.integer(3), 0.0).atoms())
            shifted.push_back({"s" + a.label, a.mass});
        DiscreteDistribution Qs{std::move(shifted)};
        ExtReal singular_value = f_divergence(Ps, Qs, g).value;
        if (!approx_equal(singular_value, bound, kIdentityTol)) {
            if (record(rep, {{"trial", t}, {"p", to_json(Ps)}, {"q", to_json(Qs)},
                             {"f", generator_json(g)}, {"value", ext_json(singular_value)},
                             {"bound", ext_json(bound)},
                             {"issue", "singular pair misses sup"}}))
                break;
        }
    }
    return rep;
}

SuiteReport suite_range(unsigned trials, std::uint64_t seed) {
    (void)seed;
    SuiteReport rep{"range", trials, {}, json::object()};
    Generator tv = builtin("tv");
    double bound = sup_bound(tv).value();
    std::vector<double> values{0.0, bound};
    const int n = 200;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            ExtReal v = two_point_divergence(i / (n + 1.0), j / (n + 1.0), tv);
            if (v.is_finite()) values.push_back(v.value());
        }
    std::sort(values.begin(), values.end());
    double max_gap = 0.0;
    for (std::size_t i = 1; i < values.size(); ++i)
        max_gap = std::max(max_gap, values[i] - values[i - 1]);
    rep.details["max_gap"] = max_gap;
    rep.details["allowed"] = 0.05 * bound;
    if (!(max_gap < 0.05 * bound))
        record(rep, {{"issue", "two-point family leaves a gap"}, {"max_gap", max_gap}});
    return rep;
}

SuiteReport suite_dpi(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"dpi", trials, {}, json::object()};
    RandomStream rs(seed);
    for (unsigned t = 0; t < trials; ++t) {
        std::size_t support = 2 + rs.integer(5);
        auto P = random_distribution(rs, support, 0.2);
        auto Q = random_distribution(rs, support, 0.2);
        Generator g = random_generator(rs);
        std::size_t groups = 1 + rs.integer(support);
        std::vector<std::size_t> assign(support);
        for (auto& a : assign) a = rs.integer(groups);
        LabelMap phi = [&](const std::string& l) {
            std::size_t idx = std::stoul(l.substr(1));
            return "g" + std::to_string(assign[idx]);
        };
        DpiResult r = dpi_check(P, Q, phi, g);
        if (!r.holds) {
            if (record(rep, {{"trial", t}, {"p", to_json(P)}, {"q", to_json(Q)},
                             {"f", generator_json(g)},
                             {"groups", assign},
                             {"before", ext_json(r.before)}, {"after", ext_json(r.after)}}))
                break;
        }
    }

    // constructed fiber-constant cases give equality (finite by construction)
    unsigned equality_cases = std::max(1u, trials / 10);
    for (unsigned t = 0; t < equality_cases && rep.violations.size() < 5; ++t) {
        std::size_t support = 2 + rs.integer(5);
        std::size_t groups = 1 + rs.integer(support);
        std::vector<std::size_t> assign(support);
        for (auto& a : assign) a = rs.integer(groups);
        std::vector<double> ratio(groups);
        for (auto& c : ratio) c = 0.1 + rs.uniform(0.0, 3.0);
        std::vector<Atom> qa, pa;
        double pz = 0.0;
        for (std::size_t i = 0; i < support; ++i) {
            double qm = -std::log(rs.uniform_oc());
            qa.push_back({"a" + std::to_string(i), qm});
            pa.push_back({"a" + std::to_string(i), ratio[assign[i]] * qm});
            pz += pa.back().mass;
        }
        double qz = 0.0;
        for (const auto& a : qa) qz += a.mass;
        for (auto& a : qa) a.mass /= qz;
        for (auto& a : pa) a.mass /= pz;  // rescaling keeps per-fiber ratios constant
        DiscreteDistribution P(pa), Q(qa);
        LabelMap phi = [&](const std::string& l) {
            std::size_t idx = std::stoul(l.substr(1));
            return "g" + std::to_string(assign[idx]);
        };
        Generator g = random_generator(rs);
        if (!fiber_constant_ratio(P, Q, phi, 1e-9)) {
            record(rep, {{"trial", t}, {"issue", "constructed case not fiber constant"}});
            continue;
        }
        DpiResult r = dpi_check(P, Q, phi, g);
        if (!approx_equal(r.after, r.before, kIdentityTol)) {
            if (record(rep, {{"trial", t}, {"p", to_json(P)}, {"q", to_json(Q)},
                             {"f", generator_json(g)},
                             {"before", ext_json(r.before)}, {"after", ext_json(r.after)},
                             {"issue", "fiber-constant case not an equality"}}))
                break;
        }
    }
    return rep;
}

SuiteReport suite_markov(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"markov", trials, {}, json::object()};
    RandomStream rs(seed);
    for (unsigned t = 0; t < trials; ++t) {
        std::size_t m = 2 + rs.integer(2), n = 2 + rs.integer(2);
        auto J = random_joint(rs, m, n, 0.0);
        // second joint over the same labels
        std::vector<std::vector<double>> pmf(J.rows(), std::vector<double>(J.cols()));
        double total = 0.0;
        for (auto& row : pmf)
            for (double& c : row) {
                c = -std::log(rs.uniform_oc());
                total += c;
            }
        for (auto& row : pmf)
            for (double& c : row) c /= total;
        JointDistribution Jp(J.x_labels(), J.y_labels(), pmf);
        auto K = random_kernel(rs, J.y_labels(), 2 + rs.integer(2));
        Generator g = random_generator(rs);

        MarkovInvariance inv = markov_invariance_check(J, Jp, K, g);
        if (!approx_equal_rel(inv.d_xyz, inv.d_xy, kTheoremTol)) {
            if (record(rep, {{"trial", t}, {"joint", to_json(J)}, {"joint2", to_json(Jp)},
                             {"kernel", to_json(K)}, {"f", generator_json(g)},
                             {"d_xyz", ext_json(inv.d_xyz)}, {"d_xy", ext_json(inv.d_xy)}}))
                break;
            continue;
        }
        MarkovMonotonicity mono = markov_chain_monotonicity(J, K, g);
        if (!mono.holds) {
            if (record(rep, {{"trial", t}, {"joint", to_json(J)}, {"kernel", to_json(K)},
                             {"f", generator_json(g)}, {"s_xy", ext_json(mono.s_xy)},
                             {"s_xz", ext_json(mono.s_xz)},
                             {"issue", "chain increased the index"}}))
                break;
        }
    }
    return rep;
}

SuiteReport suite_hellinger_triangle(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"hellinger-triangle", trials, {}, json::object()};
    RandomStream rs(seed);
    Generator h = builtin("hellinger");
    for (unsigned t = 0; t < trials; ++t) {
        std::size_t support = 1 + rs.integer(6);
        auto P = random_distribution(rs, support, 0.2);
        auto Q = random_distribution(rs, support, 0.2);
        auto R = random_distribution(rs, support, 0.2);
        double pr = std::sqrt(f_divergence(P, R, h).value.value());
        double pq = std::sqrt(f_divergence(P, Q, h).value.value());
        double qr = std::sqrt(f_divergence(Q, R, h).value.value());
        if (!(pr <= pq + qr + kTheoremTol)) {
            if (record(rep, {{"trial", t}, {"p", to_json(P)}, {"q", to_json(Q)},
                             {"r", to_json(R)}, {"sqrt_pr", pr}, {"sqrt_pq", pq},
                             {"sqrt_qr", qr}}))
                break;
        }
    }
    return rep;
}

SuiteReport suite_renyi(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"renyi", trials, {}, json::object()};
    RandomStream rs(seed);
    Generator h = builtin("hellinger");
    for (unsigned t = 0; t < trials; ++t) {
        double p = rs.uniform(0.02, 0.98), q = rs.uniform(0.02, 0.98);
        DiscreteDistribution P({{"0", 1.0 - p}, {"1", p}});
        DiscreteDistribution Q({{"0", 1.0 - q}, {"1", q}});

        double half = f_divergence(P, Q, builtin("alpha", 0.5)).value.value();
        double hell = f_divergence(P, Q, h).value.value();
        if (std::fabs(half - 2.0 * hell) > kTheoremTol) {
            if (record(rep, {{"trial", t}, {"p", to_json(P)}, {"q", to_json(Q)},
                             {"d_half", half}, {"two_d_h", 2.0 * hell},
                             {"issue", "alpha=1/2 is not twice Hellinger"}}))
                break;
            continue;
        }

        double alpha = rs.flip(0.5) ? rs.uniform(0.1, 0.9) : rs.uniform(1.1, 2.5);
        ExtReal r_direct = renyi(P, Q, alpha);
        ExtReal d_alpha = f_divergence(P, Q, builtin("alpha", alpha)).value;
        if (r_direct.is_finite() && d_alpha.is_finite()) {
            double bridged =
                std::log1p(alpha * (alpha - 1.0) * d_alpha.value()) / (alpha - 1.0);
            if (std::fabs(bridged - r_direct.value()) > kTheoremTol) {
                if (record(rep, {{"trial", t}, {"p", to_json(P)}, {"q", to_json(Q)},
                                 {"alpha", alpha}, {"renyi", r_direct.value()},
                                 {"bridged", bridged},
                                 {"issue", "Renyi relation to alpha divergence"}}))
                    break;
            }
        }
    }
    return rep;
}

SuiteReport suite_mutual_information(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"mutual-information", trials, {}, json::object()};
    RandomStream rs(seed);
    Generator klstar = builtin("kl-star");
    for (unsigned t = 0; t < trials; ++t) {
        auto J = random_joint(rs, 5, 5, 0.2);
        double mi = mutual_information(J);
        ExtReal s = csiszar_index(J, klstar).value;
        if (!approx_equal(s, ExtReal(mi), kTheoremTol)) {
            if (record(rep, {{"trial", t}, {"joint", to_json(J)},
                             {"s_klstar", ext_json(s)}, {"mutual_information", mi}}))
                break;
        }
    }
    return rep;
}

SuiteReport suite_csiszar_conditional(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"csiszar-conditional", trials, {}, json::object()};
    RandomStream rs(seed);
    for (unsigned t = 0; t < trials; ++t) {
        JointDistribution J = random_joint(rs, 5, 5, 0.2);
        bool rows_positive = true;
        for (std::size_t i = 0; i < J.rows(); ++i) {
            double px = 0.0;
            for (std::size_t j = 0; j < J.cols(); ++j) px += J.pmf(i, j);
            rows_positive &= px > 0.0;
        }
        if (!rows_positive) continue;  // representation only holds P_X-a.s.
        Generator g = random_generator(rs);
        CsiszarResult r = csiszar_index(J, g);
        if (!approx_equal_rel(r.via_joint, r.via_conditionals, kTheoremTol)) {
            if (record(rep, {{"trial", t}, {"joint", to_json(J)}, {"f", generator_json(g)},
                             {"via_joint", ext_json(r.via_joint)},
                             {"via_conditionals", ext_json(r.via_conditionals)}}))
                break;
        }
    }
    return rep;
}

SuiteReport suite_csiszar_symmetry(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"csiszar-symmetry", trials, {}, json::object()};
    RandomStream rs(seed);
    for (unsigned t = 0; t < trials; ++t) {
        auto J = random_joint(rs, 5, 5, 0.2);
        Generator g = random_generator(rs);
        ExtReal a = csiszar_index(J, g).value;
        ExtReal b = csiszar_index(J.transposed(), g).value;
        if (!approx_equal_rel(a, b, kIdentityTol)) {
            if (record(rep, {{"trial", t}, {"joint", to_json(J)}, {"f", generator_json(g)},
                             {"s_xy", ext_json(a)}, {"s_yx", ext_json(b)}}))
                break;
        }
    }
    return rep;
}

SuiteReport suite_checkerboard(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"checkerboard", trials, {}, json::object()};
    RandomStream rs(seed);
    std::vector<Generator> gens;
    for (const char* n : {"kl", "tv", "hellinger", "pearson", "neyman", "lecam", "js"})
        gens.push_back(builtin(n));
    gens.push_back(builtin("alpha", 0.3));
    for (unsigned t = 0; t < trials; ++t) {
        auto J = random_joint(rs, 6, 6, 0.15);
        const Generator& g = gens[t % gens.size()];
        ExtReal via_grid = grid_divergence(checkerboard(J), g);
        ExtReal via_index = csiszar_index(J, g).value;
        if (!approx_equal(via_grid, via_index, kIdentityTol)) {
            if (record(rep, {{"trial", t}, {"joint", to_json(J)}, {"f", generator_json(g)},
                             {"grid", ext_json(via_grid)}, {"index", ext_json(via_index)}}))
                break;
        }
    }
    return rep;
}

SuiteReport suite_minimality(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"minimality", trials, {}, json::object()};
    RandomStream rs(seed);
    Generator hell = builtin("hellinger"), pear = builtin("pearson");
    for (unsigned t = 0; t < trials; ++t) {
        auto J = random_joint(rs, 4, 4, 0.1);
        std::vector<GridCopula> candidates;
        for (int c = 0; c < 5; ++c)
            candidates.push_back(random_refinement(rs, J, 2 + rs.integer(2)));
        for (const Generator* g : {&hell, &pear}) {
            if (!minimality_check(J, candidates, *g)) {
                if (record(rep, {{"trial", t}, {"joint", to_json(J)},
                                 {"f", generator_json(*g)},
                                 {"issue", "a refinement beat the checkerboard"}}))
                    return rep;
            }
        }
    }
    return rep;
}

SuiteReport suite_sampler(unsigned trials, std::uint64_t seed) {
    SuiteReport rep{"sampler", trials, {}, json::object()};
    const std::size_t n = 100000;
    auto J = bernoulli_pair_joint(0.5, 0.5, 5.0 / 16.0);
    GridCopula cb = checkerboard(J);
    auto samples = interpolating_sample(J, RandomizationScheme::shared, n, seed);

    std::vector<double> us, vs;
    us.reserve(n);
    vs.reserve(n);
    for (const auto& s : samples) {
        us.push_back(s.u);
        vs.push_back(s.v);
    }
    double pu = ks_uniform_pvalue(us), pv = ks_uniform_pvalue(vs);
    rep.details["ks_p_u"] = pu;
    rep.details["ks_p_v"] = pv;
    if (pu <= 0.001 || pv <= 0.001)
        record(rep, {{"issue", "marginals fail KS uniformity"}, {"p_u", pu}, {"p_v", pv}});

    double worst_z = 0.0;
    for (double u0 : {0.25, 0.5, 0.75})
        for (double v0 : {0.25, 0.5, 0.75}) {
            double expected = cb.cdf(u0, v0);
            double hits = 0.0;
            for (const auto& s : samples) hits += (s.u <= u0 && s.v <= v0) ? 1.0 : 0.0;
            double emp = hits / n;
            double se = std::sqrt(expected * (1.0 - expected) / n);
            double z = se > 0.0 ? std::fabs(emp - expected) / se : 0.0;
            worst_z = std::max(worst_z, z);
            if (std::fabs(emp - expected) > 3.0 * se + 1e-12) {
                if (record(rep, {{"u", u0}, {"v", v0}, {"empirical", emp},
                                 {"expected", expected}, {"se", se},
                                 {"issue", "sample cdf far from checkerboard"}}))
                    return rep;
            }
        }
    rep.details["worst_z"] = worst_z;
    rep.details["n"] = n;
    return rep;
}

} // namespace

const std::vector<std::string>& check_suite_names() {
    static const std::vector<std::string> names{
        "duality",        "affine",          "conjugate",
        "nonnegativity",  "supremum",        "range",
        "dpi",            "markov",          "hellinger-triangle",
        "renyi",          "mutual-information", "csiszar-conditional",
        "csiszar-symmetry", "checkerboard",  "minimality",
        "sampler"};
    return names;
}

SuiteReport run_check_suite(const std::string& suite, unsigned trials, std::uint64_t seed) {
    if (suite == "duality") return suite_duality(trials, seed);
    if (suite == "affine") return suite_affine(trials, seed);
    if (suite == "conjugate") return suite_conjugate(trials, seed);
    if (suite == "nonnegativity") return suite_nonnegativity(trials, seed);
    if (suite == "supremum") return suite_supremum(trials, seed);
    if (suite == "range") return suite_range(trials, seed);
    if (suite == "dpi") return suite_dpi(trials, seed);
    if (suite == "markov") return suite_markov(trials, seed);
    if (suite == "hellinger-triangle") return suite_hellinger_triangle(trials, seed);
    if (suite == "renyi") return suite_renyi(trials, seed);
    if (suite == "mutual-information") return suite_mutual_information(trials, seed);
    if (suite == "csiszar-conditional") return suite_csiszar_conditional(trials, seed);
    if (suite == "csiszar-symmetry") return suite_csiszar_symmetry(trials, seed);
    if (suite == "checkerboard") return suite_checkerboard(trials, seed);
    if (suite == "minimality") return suite_minimality(trials, seed);
    if (suite == "sampler") return suite_sampler(trials, seed);
    fail(ErrorCode::parse_error, "unknown check suite: " + suite);
}

} // namespace divkit
