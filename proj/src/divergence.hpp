#pragma once

#include <span>

#include "ext_real.hpp"
#include "generators.hpp"
#include "measures.hpp"

namespace divkit {

/// D_f(P||Q) split into its absolutely continuous part and the singular
/// correction f*(0) P(dP/dQ = +inf).
struct DivergenceValue {
    ExtReal value;
    double singular_mass = 0.0;
    ExtReal absolutely_continuous_part;
};

/// Core kernel over index-aligned density vectors (counting measure on a
/// common support). Summation is Kahan-compensated in index order.
DivergenceValue f_divergence_aligned(std::span<const double> p, std::span<const double> q,
                                     const Generator& g);

DivergenceValue f_divergence(const DiscreteDistribution& P, const DiscreteDistribution& Q,
                             const Generator& g);

/// D_f between two joints over identical label sets (cells compared in
/// row-major order).
DivergenceValue f_divergence(const JointDistribution& P, const JointDistribution& Q,
                             const Generator& g);

/// The split D_f = int_{0<=p<q} f(p/q) q + int_{0<=q<p} f*(q/p) p; the two
/// parts sum to the full divergence since p = q cells contribute f(1) = 0.
struct SymmetricDecomposition {
    ExtReal lower_part;  // over {0 <= p < q}, weighted by q
    ExtReal upper_part;  // over {0 <= q < p}, weighted by p, through f*
};

SymmetricDecomposition symmetric_decomposition(const DiscreteDistribution& P,
                                               const DiscreteDistribution& Q,
                                               const Generator& g);

/// D_f between the two-point laws P_s = (s, 1-s) and P_t = (t, 1-t):
/// f(s/t) t + f((1-s)/(1-t)) (1-t). Pre: s, t in (0,1).
ExtReal two_point_divergence(double s, double t, const Generator& g);

/// Renyi divergence of order alpha: (alpha-1)^{-1} log sum p^alpha q^{1-alpha}.
/// Terms with q = 0 contribute 0 for alpha < 1 and force +inf for alpha > 1
/// when p > 0. alpha = 1 dispatches to Kullback-Leibler.
ExtReal renyi(const DiscreteDistribution& P, const DiscreteDistribution& Q, double alpha);

/// Shannon entropy -sum p log p (natural log), with 0 log 0 = 0.
double entropy(const DiscreteDistribution& P);

struct DpiResult {
    ExtReal before;
    ExtReal after;
    bool holds = false;
};

/// Data-processing check for the push-forward by a label map.
DpiResult dpi_check(const DiscreteDistribution& P, const DiscreteDistribution& Q,
                    const LabelMap& phi, const Generator& g);

/// True when dP/dQ is constant on every fiber of phi (within tol on labels
/// carrying mass), i.e. the explicit sigma(phi)-measurability test under
/// which the push-forward inequality is an equality.
bool fiber_constant_ratio(const DiscreteDistribution& P, const DiscreteDistribution& Q,
                          const LabelMap& phi, double tol = 1e-12);

struct MarkovInvariance {
    ExtReal d_xyz;  // divergence between the (X,Y,Z) triples
    ExtReal d_xy;   // divergence between the (X,Y) pairs
};

/// Extends two joints over identical labels by a shared kernel Y -> Z and
/// compares D_f(J' K || J K) with D_f(J' || J); the two must agree.
MarkovInvariance markov_invariance_check(const JointDistribution& J_xy,
                                         const JointDistribution& Jp_xy,
                                         const StochasticKernel& K_z_given_y,
                                         const Generator& g);

} // namespace divkit
