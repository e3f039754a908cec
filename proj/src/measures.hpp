#pragma once

#include <functional>
#include <string>
#include <vector>

#include "error.hpp"

namespace divkit {

struct Atom {
    std::string label;
    double mass = 0.0;
};

/// Finite discrete probability distribution over labelled atoms. Labels are
/// opaque tokens; their order is preserved and fixes every downstream matrix
/// layout. Zero-mass atoms are legal (they place two distributions on a
/// common support).
class DiscreteDistribution {
public:
    /// Validates: distinct labels, masses >= 0, total within 1e-9 of 1
    /// (then renormalized exactly).
    explicit DiscreteDistribution(std::vector<Atom> atoms);

    static DiscreteDistribution point_mass(const std::string& label);

    std::size_t size() const { return atoms_.size(); }
    const std::string& label(std::size_t i) const { return atoms_[i].label; }
    double mass(std::size_t i) const { return atoms_[i].mass; }
    const std::vector<Atom>& atoms() const { return atoms_; }

private:
    std::vector<Atom> atoms_;
};

/// Joint pmf over ordered label sets; entry (i, j) = P(X = x_i, Y = y_j).
class JointDistribution {
public:
    JointDistribution(std::vector<std::string> x_labels,
                      std::vector<std::string> y_labels,
                      std::vector<std::vector<double>> pmf);

    std::size_t rows() const { return x_labels_.size(); }
    std::size_t cols() const { return y_labels_.size(); }
    const std::vector<std::string>& x_labels() const { return x_labels_; }
    const std::vector<std::string>& y_labels() const { return y_labels_; }
    double pmf(std::size_t i, std::size_t j) const { return pmf_[i][j]; }
    const std::vector<std::vector<double>>& cells() const { return pmf_; }

    JointDistribution transposed() const;

private:
    std::vector<std::string> x_labels_;
    std::vector<std::string> y_labels_;
    std::vector<std::vector<double>> pmf_;
};

/// Row-stochastic kernel: row i is the distribution K(x_i, .) over targets.
class StochasticKernel {
public:
    StochasticKernel(std::vector<std::string> source_labels,
                     std::vector<std::string> target_labels,
                     std::vector<std::vector<double>> rows);

    static StochasticKernel identity(const std::vector<std::string>& labels);

    std::size_t sources() const { return source_labels_.size(); }
    std::size_t targets() const { return target_labels_.size(); }
    const std::vector<std::string>& source_labels() const { return source_labels_; }
    const std::vector<std::string>& target_labels() const { return target_labels_; }
    double at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

private:
    std::vector<std::string> source_labels_;
    std::vector<std::string> target_labels_;
    std::vector<std::vector<double>> rows_;
};

enum class SupportClass { both_positive, p_only, q_only, both_zero };

/// Two densities on the sorted union support, with per-label classification.
/// This realizes the Lebesgue decomposition with the counting measure on the
/// union as the dominating measure, so the densities are the pmfs themselves.
struct DensityPair {
    std::vector<std::string> labels;
    std::vector<double> p;
    std::vector<double> q;
    std::vector<SupportClass> classes;
};

/// Conditional rows of a joint given X. Rows at zero-mass x are flagged
/// undefined, never fabricated.
struct ConditionalKernel {
    std::vector<std::string> x_labels;
    std::vector<std::string> y_labels;
    std::vector<std::vector<double>> rows;
    std::vector<bool> defined;

    /// Full stochastic kernel; throws unless every row is defined.
    StochasticKernel kernel() const;
};

DensityPair align(const DiscreteDistribution& P, const DiscreteDistribution& Q);

using LabelMap = std::function<std::string(const std::string&)>;

DiscreteDistribution pushforward_map(const DiscreteDistribution& P, const LabelMap& phi);

DiscreteDistribution pushforward_kernel(const DiscreteDistribution& P,
                                        const StochasticKernel& K);

JointDistribution product(const DiscreteDistribution& PX, const DiscreteDistribution& PY);

std::pair<DiscreteDistribution, DiscreteDistribution> marginals(const JointDistribution& J);

ConditionalKernel conditionals(const JointDistribution& J);

/// Joint of (X, Z) under the chain X - Y - Z: pmf(x, z) = sum_y J(x, y) K(y, z).
JointDistribution markov_compose(const JointDistribution& J_xy,
                                 const StochasticKernel& K_z_given_y);

/// Coordinatewise push-forward of a joint by (phi_x, phi_y).
JointDistribution pushforward_joint(const JointDistribution& J, const LabelMap& phi_x,
                                    const LabelMap& phi_y);

} // namespace divkit
