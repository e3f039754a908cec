#include "measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace divkit {

namespace {

const double kSumTolerance = 1e-9;

// Validates nonnegativity and unit total mass, renormalizing drift <= 1e-9.
void normalize_masses(std::vector<double*> cells, const char* what) {
    double total = 0.0;
    for (double* c : cells) {
        if (!(*c >= 0.0) || !std::isfinite(*c))
            fail(ErrorCode::invalid_argument,
                 std::string(what) + ": masses must be finite and >= 0");
        total += *c;
    }
    if (std::fabs(total - 1.0) > kSumTolerance)
        fail(ErrorCode::invalid_argument,
             std::string(what) + ": masses must sum to 1 (got " + std::to_string(total) + ")");
    if (total != 1.0)
        for (double* c : cells) *c /= total;
}

void check_distinct(const std::vector<std::string>& labels, const char* what) {
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            fail(ErrorCode::invalid_argument, std::string(what) + ": duplicate label '" + l + "'");
}

} // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty())
        fail(ErrorCode::invalid_argument, "distribution: needs at least one atom");
    std::vector<std::string> labels;
    labels.reserve(atoms_.size());
    for (const auto& a : atoms_) labels.push_back(a.label);
    check_distinct(labels, "distribution");
    std::vector<double*> cells;
    cells.reserve(atoms_.size());
    for (auto& a : atoms_) cells.push_back(&a.mass);
    normalize_masses(cells, "distribution");
}

DiscreteDistribution DiscreteDistribution::point_mass(const std::string& label) {
    return DiscreteDistribution({{label, 1.0}});
}

JointDistribution::JointDistribution(std::vector<std::string> x_labels,
                                     std::vector<std::string> y_labels,
                                     std::vector<std::vector<double>> pmf)
    : x_labels_(std::move(x_labels)), y_labels_(std::move(y_labels)), pmf_(std::move(pmf)) {
    if (x_labels_.empty() || y_labels_.empty())
        fail(ErrorCode::invalid_argument, "joint: needs nonempty label sets");
    check_distinct(x_labels_, "joint x");
    check_distinct(y_labels_, "joint y");
    if (pmf_.size() != x_labels_.size())
        fail(ErrorCode::invalid_argument, "joint: pmf row count does not match x labels");
    std::vector<double*> cells;
    for (auto& row : pmf_) {
        if (row.size() != y_labels_.size())
            fail(ErrorCode::invalid_argument, "joint: pmf column count does not match y labels");
        for (double& c : row) cells.push_back(&c);
    }
    normalize_masses(cells, "joint");
}

JointDistribution JointDistribution::transposed() const {
    std::vector<std::vector<double>> t(cols(), std::vector<double>(rows()));
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) t[j][i] = pmf_[i][j];
    return JointDistribution(y_labels_, x_labels_, std::move(t));
}

StochasticKernel::StochasticKernel(std::vector<std::string> source_labels,
                                   std::vector<std::string> target_labels,
                                   std::vector<std::vector<double>> rows)
    : source_labels_(std::move(source_labels)),
      target_labels_(std::move(target_labels)),
      rows_(std::move(rows)) {
    if (source_labels_.empty() || target_labels_.empty())
        fail(ErrorCode::invalid_argument, "kernel: needs nonempty label sets");
    check_distinct(source_labels_, "kernel source");
    check_distinct(target_labels_, "kernel target");
    if (rows_.size() != source_labels_.size())
        fail(ErrorCode::invalid_argument, "kernel: row count does not match source labels");
    for (auto& row : rows_) {
        if (row.size() != target_labels_.size())
            fail(ErrorCode::invalid_argument, "kernel: row width does not match target labels");
        std::vector<double*> cells;
        for (double& c : row) cells.push_back(&c);
        normalize_masses(cells, "kernel row");
    }
}

StochasticKernel StochasticKernel::identity(const std::vector<std::string>& labels) {
    std::vector<std::vector<double>> rows(labels.size(), std::vector<double>(labels.size(), 0.0));
    for (std::size_t i = 0; i < labels.size(); ++i) rows[i][i] = 1.0;
    return StochasticKernel(labels, labels, std::move(rows));
}

StochasticKernel ConditionalKernel::kernel() const {
    for (std::size_t i = 0; i < defined.size(); ++i)
        if (!defined[i])
            fail(ErrorCode::invalid_argument,
                 "conditional row for zero-mass atom '" + x_labels[i] + "' is undefined");
    return StochasticKernel(x_labels, y_labels, rows);
}

DensityPair align(const DiscreteDistribution& P, const DiscreteDistribution& Q) {
    std::map<std::string, std::pair<double, double>> merged;
    for (const auto& a : P.atoms()) merged[a.label].first = a.mass;
    for (const auto& a : Q.atoms()) merged[a.label].second = a.mass;

    DensityPair out;
    out.labels.reserve(merged.size());
    for (const auto& [label, pq] : merged) {
        out.labels.push_back(label);
        out.p.push_back(pq.first);
        out.q.push_back(pq.second);
        if (pq.first > 0.0 && pq.second > 0.0)
            out.classes.push_back(SupportClass::both_positive);
        else if (pq.first > 0.0)
            out.classes.push_back(SupportClass::p_only);
        else if (pq.second > 0.0)
            out.classes.push_back(SupportClass::q_only);
        else
            out.classes.push_back(SupportClass::both_zero);
    }
    return out;
}

DiscreteDistribution pushforward_map(const DiscreteDistribution& P, const LabelMap& phi) {
    // first occurrence fixes the output order, keeping the layout deterministic
    std::vector<Atom> out;
    std::map<std::string, std::size_t> index;
    for (const auto& a : P.atoms()) {
        std::string image = phi(a.label);
        auto it = index.find(image);
        if (it == index.end()) {
            index.emplace(image, out.size());
            out.push_back({image, a.mass});
        } else {
            out[it->second].mass += a.mass;
        }
    }
    return DiscreteDistribution(std::move(out));
}

DiscreteDistribution pushforward_kernel(const DiscreteDistribution& P,
                                        const StochasticKernel& K) {
    std::map<std::string, std::size_t> source_index;
    for (std::size_t i = 0; i < K.sources(); ++i) source_index[K.source_labels()[i]] = i;

    std::vector<double> mass(K.targets(), 0.0);
    for (const auto& a : P.atoms()) {
        if (a.mass == 0.0) continue;
        auto it = source_index.find(a.label);
        if (it == source_index.end())
            fail(ErrorCode::label_mismatch,
                 "kernel has no source row for label '" + a.label + "'");
        for (std::size_t j = 0; j < K.targets(); ++j)
            mass[j] += a.mass * K.at(it->second, j);
    }
    std::vector<Atom> out;
    out.reserve(K.targets());
    for (std::size_t j = 0; j < K.targets(); ++j) out.push_back({K.target_labels()[j], mass[j]});
    return DiscreteDistribution(std::move(out));
}

JointDistribution product(const DiscreteDistribution& PX, const DiscreteDistribution& PY) {
    std::vector<std::string> xl, yl;
    for (const auto& a : PX.atoms()) xl.push_back(a.label);
    for (const auto& a : PY.atoms()) yl.push_back(a.label);
    std::vector<std::vector<double>> pmf(PX.size(), std::vector<double>(PY.size()));
    for (std::size_t i = 0; i < PX.size(); ++i)
        for (std::size_t j = 0; j < PY.size(); ++j) pmf[i][j] = PX.mass(i) * PY.mass(j);
    return JointDistribution(std::move(xl), std::move(yl), std::move(pmf));
}

std::pair<DiscreteDistribution, DiscreteDistribution> marginals(const JointDistribution& J) {
    std::vector<Atom> x(J.rows()), y(J.cols());
    for (std::size_t i = 0; i < J.rows(); ++i) x[i] = {J.x_labels()[i], 0.0};
    for (std::size_t j = 0; j < J.cols(); ++j) y[j] = {J.y_labels()[j], 0.0};
    for (std::size_t i = 0; i < J.rows(); ++i)
        for (std::size_t j = 0; j < J.cols(); ++j) {
            x[i].mass += J.pmf(i, j);
            y[j].mass += J.pmf(i, j);
        }
    return {DiscreteDistribution(std::move(x)), DiscreteDistribution(std::move(y))};
}

ConditionalKernel conditionals(const JointDistribution& J) {
    ConditionalKernel out;
    out.x_labels = J.x_labels();
    out.y_labels = J.y_labels();
    out.rows.assign(J.rows(), std::vector<double>(J.cols(), 0.0));
    out.defined.assign(J.rows(), false);
    for (std::size_t i = 0; i < J.rows(); ++i) {
        double px = 0.0;
        for (std::size_t j = 0; j < J.cols(); ++j) px += J.pmf(i, j);
        if (px == 0.0) continue;
        out.defined[i] = true;
        for (std::size_t j = 0; j < J.cols(); ++j) out.rows[i][j] = J.pmf(i, j) / px;
    }
    return out;
}

JointDistribution markov_compose(const JointDistribution& J_xy,
                                 const StochasticKernel& K_z_given_y) {
    if (J_xy.y_labels() != K_z_given_y.source_labels())
        fail(ErrorCode::label_mismatch, "markov_compose: kernel source must match Y labels");
    std::vector<std::vector<double>> pmf(J_xy.rows(),
                                         std::vector<double>(K_z_given_y.targets(), 0.0));
    for (std::size_t i = 0; i < J_xy.rows(); ++i)
        for (std::size_t j = 0; j < J_xy.cols(); ++j) {
            double m = J_xy.pmf(i, j);
            if (m == 0.0) continue;
            for (std::size_t k = 0; k < K_z_given_y.targets(); ++k)
                pmf[i][k] += m * K_z_given_y.at(j, k);
        }
    return JointDistribution(J_xy.x_labels(), K_z_given_y.target_labels(), std::move(pmf));
}

JointDistribution pushforward_joint(const JointDistribution& J, const LabelMap& phi_x,
                                    const LabelMap& phi_y) {
    std::vector<std::string> xl, yl;
    std::map<std::string, std::size_t> xi, yi;
    for (const auto& l : J.x_labels()) {
        std::string image = phi_x(l);
        if (xi.emplace(image, xl.size()).second) xl.push_back(image);
    }
    for (const auto& l : J.y_labels()) {
        std::string image = phi_y(l);
        if (yi.emplace(image, yl.size()).second) yl.push_back(image);
    }
    std::vector<std::vector<double>> pmf(xl.size(), std::vector<double>(yl.size(), 0.0));
    for (std::size_t i = 0; i < J.rows(); ++i)
        for (std::size_t j = 0; j < J.cols(); ++j)
            pmf[xi[phi_x(J.x_labels()[i])]][yi[phi_y(J.y_labels()[j])]] += J.pmf(i, j);
    return JointDistribution(std::move(xl), std::move(yl), std::move(pmf));
}

} // namespace divkit
