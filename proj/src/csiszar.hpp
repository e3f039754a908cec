#pragma once

#include "divergence.hpp"

namespace divkit {

/// S_f(X,Y) = D_f(P_X (x) P_Y || P_{(X,Y)}), computed two ways: directly on
/// the flattened pair support, and through the conditional representation
/// sum_x P_X(x) D_f(P_Y || P_{Y|X=x}) (zero-mass x atoms are skipped).
struct CsiszarResult {
    ExtReal value;
    ExtReal via_joint;
    ExtReal via_conditionals;
    double singular_mass = 0.0;  // mass of product cells where the joint vanishes
};

CsiszarResult csiszar_index(const JointDistribution& J, const Generator& g);

/// H(X) + H(Y) - H(X,Y); coincides with S_f for f = f_{KL*}.
double mutual_information(const JointDistribution& J);

struct TransformResult {
    ExtReal before;
    ExtReal after;
    bool holds = false;
};

/// Coordinatewise transformations never increase the index.
TransformResult transform_reduces(const JointDistribution& J, const LabelMap& phi_x,
                                  const LabelMap& phi_y, const Generator& g);

struct MarkovMonotonicity {
    ExtReal s_xy;
    ExtReal s_xz;
    bool holds = false;
};

/// Along a chain X - Y - Z, S_f(X,Z) <= S_f(X,Y).
MarkovMonotonicity markov_chain_monotonicity(const JointDistribution& J_xy,
                                             const StochasticKernel& K_z_given_y,
                                             const Generator& g);

struct AugmentationResult {
    ExtReal s_base;
    ExtReal s_aug;
    bool holds_equal = false;
};

/// Adjoining a U independent of (X,Y) to the first coordinate leaves the
/// index unchanged: S_f((X,U), Y) = S_f(X, Y).
AugmentationResult independent_augmentation_check(const JointDistribution& J_xy,
                                                  const DiscreteDistribution& PU,
                                                  const Generator& g);

} // namespace divkit
