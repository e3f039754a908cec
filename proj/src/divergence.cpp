#include "divergence.hpp"

#include <cmath>
#include <map>

namespace divkit {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Flattens both joints row-major after checking the label sets line up.
void flatten_pair(const JointDistribution& P, const JointDistribution& Q,
                  std::vector<double>& p, std::vector<double>& q) {
    if (P.x_labels() != Q.x_labels() || P.y_labels() != Q.y_labels())
        fail(ErrorCode::label_mismatch, "joint divergence: label sets must be identical");
    p.reserve(P.rows() * P.cols());
    q.reserve(P.rows() * P.cols());
    for (std::size_t i = 0; i < P.rows(); ++i)
        for (std::size_t j = 0; j < P.cols(); ++j) {
            p.push_back(P.pmf(i, j));
            q.push_back(Q.pmf(i, j));
        }
}

} // namespace

DivergenceValue f_divergence_aligned(std::span<const double> p, std::span<const double> q,
                                     const Generator& g) {
    assert(p.size() == q.size());
    KahanSum ac;
    bool ac_infinite = false;
    KahanSum singular;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (q[i] > 0.0) {
            if (p[i] == 0.0) {
                if (g.at_zero().is_infinite())
                    ac_infinite = true;
                else
                    ac.add(q[i] * g.at_zero().value());
            } else {
                double term = q[i] * g(p[i] / q[i]);
                if (std::isinf(term))
                    ac_infinite = true;
                else
                    ac.add(term);
            }
        } else if (p[i] > 0.0) {
            singular.add(p[i]);
        }
    }
    DivergenceValue out;
    out.singular_mass = singular.value();
    out.absolutely_continuous_part = ac_infinite ? ExtReal::infinity() : ExtReal(ac.value());
    out.value = out.absolutely_continuous_part +
                singular_product(g.conj_at_zero(), out.singular_mass);
    return out;
}

DivergenceValue f_divergence(const DiscreteDistribution& P, const DiscreteDistribution& Q,
                             const Generator& g) {
    DensityPair d = align(P, Q);
    return f_divergence_aligned(d.p, d.q, g);
}

DivergenceValue f_divergence(const JointDistribution& P, const JointDistribution& Q,
                             const Generator& g) {
    std::vector<double> p, q;
    flatten_pair(P, Q, p, q);
    return f_divergence_aligned(p, q, g);
}

SymmetricDecomposition symmetric_decomposition(const DiscreteDistribution& P,
                                               const DiscreteDistribution& Q,
                                               const Generator& g) {
    DensityPair d = align(P, Q);
    Generator gc = conjugate(g);
    KahanSum lower, upper;
    bool lower_inf = false, upper_inf = false;
    for (std::size_t i = 0; i < d.labels.size(); ++i) {
        double p = d.p[i], q = d.q[i];
        if (p < q) {
            // 0 <= p < q, weight q, through f (p = 0 uses the f(0+) limit)
            if (p == 0.0) {
                if (g.at_zero().is_infinite())
                    lower_inf = true;
                else
                    lower.add(q * g.at_zero().value());
            } else {
                double term = q * g(p / q);
                if (std::isinf(term)) lower_inf = true; else lower.add(term);
            }
        } else if (q < p) {
            // 0 <= q < p, weight p, through f* (q = 0 uses f*(0))
            if (q == 0.0) {
                if (gc.at_zero().is_infinite())
                    upper_inf = true;
                else
                    upper.add(p * gc.at_zero().value());
            } else {
                double term = p * gc(q / p);
                if (std::isinf(term)) upper_inf = true; else upper.add(term);
            }
        }
    }
    return {lower_inf ? ExtReal::infinity() : ExtReal(lower.value()),
            upper_inf ? ExtReal::infinity() : ExtReal(upper.value())};
}

ExtReal two_point_divergence(double s, double t, const Generator& g) {
    if (!(s > 0.0 && s < 1.0 && t > 0.0 && t < 1.0))
        fail(ErrorCode::invalid_argument, "two_point_divergence: s, t must lie in (0,1)");
    double a = g(s / t) * t;
    double b = g((1.0 - s) / (1.0 - t)) * (1.0 - t);
    double v = a + b;
    return std::isinf(v) ? ExtReal::infinity() : ExtReal(v);
}

ExtReal renyi(const DiscreteDistribution& P, const DiscreteDistribution& Q, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        fail(ErrorCode::invalid_argument, "renyi: alpha must lie in (0, inf)");
    if (alpha == 1.0) return f_divergence(P, Q, builtin("kl")).value;

    DensityPair d = align(P, Q);
    KahanSum sum;
    for (std::size_t i = 0; i < d.labels.size(); ++i) {
        double p = d.p[i], q = d.q[i];
        if (q == 0.0) {
            if (p > 0.0 && alpha > 1.0) return ExtReal::infinity();
            continue;  // p^alpha q^{1-alpha} = 0 for alpha < 1
        }
        if (p == 0.0) continue;
        sum.add(std::pow(p, alpha) * std::pow(q, 1.0 - alpha));
    }
    double s = sum.value();
    if (s == 0.0) return ExtReal::infinity();  // log 0 / (alpha-1) with alpha < 1
    double v = std::log(s) / (alpha - 1.0);
    return std::isinf(v) ? ExtReal::infinity() : ExtReal(v);
}

double entropy(const DiscreteDistribution& P) {
    KahanSum h;
    for (const auto& a : P.atoms())
        if (a.mass > 0.0) h.add(-a.mass * std::log(a.mass));
    return h.value();
}

DpiResult dpi_check(const DiscreteDistribution& P, const DiscreteDistribution& Q,
                    const LabelMap& phi, const Generator& g) {
    DpiResult r;
    r.before = f_divergence(P, Q, g).value;
    r.after = f_divergence(pushforward_map(P, phi), pushforward_map(Q, phi), g).value;
    r.holds = leq_with_tol(r.after, r.before, 1e-10);
    return r;
}

bool fiber_constant_ratio(const DiscreteDistribution& P, const DiscreteDistribution& Q,
                          const LabelMap& phi, double tol) {
    DensityPair d = align(P, Q);
    // ratio per fiber, with +inf for p > 0 = q; both-zero labels carry no mass
    std::map<std::string, double> fiber_ratio;
    for (std::size_t i = 0; i < d.labels.size(); ++i) {
        if (d.classes[i] == SupportClass::both_zero) continue;
        double ratio = d.q[i] > 0.0 ? d.p[i] / d.q[i] : kInf;
        auto [it, inserted] = fiber_ratio.emplace(phi(d.labels[i]), ratio);
        if (inserted) continue;
        double seen = it->second;
        if (std::isinf(seen) != std::isinf(ratio)) return false;
        if (!std::isinf(seen) && std::fabs(seen - ratio) > tol) return false;
    }
    return true;
}

MarkovInvariance markov_invariance_check(const JointDistribution& J_xy,
                                         const JointDistribution& Jp_xy,
                                         const StochasticKernel& K_z_given_y,
                                         const Generator& g) {
    if (J_xy.x_labels() != Jp_xy.x_labels() || J_xy.y_labels() != Jp_xy.y_labels())
        fail(ErrorCode::label_mismatch, "markov_invariance_check: joints must share labels");
    if (J_xy.y_labels() != K_z_given_y.source_labels())
        fail(ErrorCode::label_mismatch, "markov_invariance_check: kernel source must be Y");

    // triple pmfs P(x,y,z) = J(x,y) K(y,z), flattened in (x,y,z) order
    std::vector<double> t, tp;
    for (std::size_t i = 0; i < J_xy.rows(); ++i)
        for (std::size_t j = 0; j < J_xy.cols(); ++j)
            for (std::size_t k = 0; k < K_z_given_y.targets(); ++k) {
                t.push_back(J_xy.pmf(i, j) * K_z_given_y.at(j, k));
                tp.push_back(Jp_xy.pmf(i, j) * K_z_given_y.at(j, k));
            }

    MarkovInvariance out;
    out.d_xyz = f_divergence_aligned(tp, t, g).value;
    out.d_xy = f_divergence(Jp_xy, J_xy, g).value;
    return out;
}

} // namespace divkit
