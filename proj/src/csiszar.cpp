#include "csiszar.hpp"

namespace divkit {

CsiszarResult csiszar_index(const JointDistribution& J, const Generator& g) {
    auto [px, py] = marginals(J);

    // flatten P_X (x) P_Y and the joint over the row-major pair support;
    // building the product cells in place keeps every double identical to
    // what the checkerboard path sees, so the two routes agree exactly
    std::vector<double> prod(J.rows() * J.cols()), joint(J.rows() * J.cols());
    for (std::size_t i = 0; i < J.rows(); ++i)
        for (std::size_t j = 0; j < J.cols(); ++j) {
            prod[i * J.cols() + j] = px.mass(i) * py.mass(j);
            joint[i * J.cols() + j] = J.pmf(i, j);
        }
    DivergenceValue direct = f_divergence_aligned(prod, joint, g);

    ConditionalKernel cond = conditionals(J);
    KahanSum mixture;
    bool infinite = false;
    std::vector<double> q_row(J.cols());
    std::vector<double> py_vec(J.cols());
    for (std::size_t j = 0; j < J.cols(); ++j) py_vec[j] = py.mass(j);
    for (std::size_t i = 0; i < J.rows(); ++i) {
        double pxi = px.mass(i);
        if (pxi == 0.0 || !cond.defined[i]) continue;
        for (std::size_t j = 0; j < J.cols(); ++j) q_row[j] = cond.rows[i][j];
        DivergenceValue row = f_divergence_aligned(py_vec, q_row, g);
        if (row.value.is_infinite())
            infinite = true;
        else
            mixture.add(pxi * row.value.value());
    }

    CsiszarResult out;
    out.via_joint = direct.value;
    out.via_conditionals = infinite ? ExtReal::infinity() : ExtReal(mixture.value());
    out.value = out.via_joint;
    out.singular_mass = direct.singular_mass;
    return out;
}

double mutual_information(const JointDistribution& J) {
    auto [px, py] = marginals(J);
    KahanSum joint_entropy;
    for (std::size_t i = 0; i < J.rows(); ++i)
        for (std::size_t j = 0; j < J.cols(); ++j) {
            double m = J.pmf(i, j);
            if (m > 0.0) joint_entropy.add(-m * std::log(m));
        }
    return entropy(px) + entropy(py) - joint_entropy.value();
}

TransformResult transform_reduces(const JointDistribution& J, const LabelMap& phi_x,
                                  const LabelMap& phi_y, const Generator& g) {
    TransformResult r;
    r.before = csiszar_index(J, g).value;
    r.after = csiszar_index(pushforward_joint(J, phi_x, phi_y), g).value;
    r.holds = leq_with_tol(r.after, r.before, 1e-10);
    return r;
}

MarkovMonotonicity markov_chain_monotonicity(const JointDistribution& J_xy,
                                             const StochasticKernel& K_z_given_y,
                                             const Generator& g) {
    MarkovMonotonicity r;
    r.s_xy = csiszar_index(J_xy, g).value;
    r.s_xz = csiszar_index(markov_compose(J_xy, K_z_given_y), g).value;
    r.holds = leq_with_tol(r.s_xz, r.s_xy, 1e-10);
    return r;
}

AugmentationResult independent_augmentation_check(const JointDistribution& J_xy,
                                                  const DiscreteDistribution& PU,
                                                  const Generator& g) {
    // joint of ((X,U), Y) with U independent of (X,Y); '\x1f' keeps the
    // composite labels collision-free
    std::vector<std::string> xu_labels;
    std::vector<std::vector<double>> pmf;
    for (std::size_t i = 0; i < J_xy.rows(); ++i)
        for (std::size_t u = 0; u < PU.size(); ++u) {
            xu_labels.push_back(J_xy.x_labels()[i] + '\x1f' + PU.label(u));
            std::vector<double> row(J_xy.cols());
            for (std::size_t j = 0; j < J_xy.cols(); ++j)
                row[j] = J_xy.pmf(i, j) * PU.mass(u);
            pmf.push_back(std::move(row));
        }
    JointDistribution augmented(std::move(xu_labels), J_xy.y_labels(), std::move(pmf));

    AugmentationResult r;
    r.s_base = csiszar_index(J_xy, g).value;
    r.s_aug = csiszar_index(augmented, g).value;
    r.holds_equal = approx_equal(r.s_aug, r.s_base, 1e-10);
    return r;
}

} // namespace divkit
