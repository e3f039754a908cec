#include "copulas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dilog.hpp"
#include "gauss_legendre.hpp"
#include "rng.hpp"

namespace divkit {

namespace {

const double kInf = std::numeric_limits<double>::infinity();
const double kPi = 3.14159265358979323846;
const double kTwoPi = 2.0 * kPi;

} // namespace

StepCdf::StepCdf(std::vector<double> atom_values, std::vector<double> masses) {
    if (atom_values.size() != masses.size() || atom_values.empty())
        fail(ErrorCode::invalid_argument, "step cdf: values and masses must pair up");
    std::vector<std::size_t> order(atom_values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return atom_values[a] < atom_values[b]; });

    double total = 0.0;
    for (double m : masses) {
        if (!(m >= 0.0) || !std::isfinite(m))
            fail(ErrorCode::invalid_argument, "step cdf: masses must be finite and >= 0");
        total += m;
    }
    if (std::fabs(total - 1.0) > 1e-9)
        fail(ErrorCode::invalid_argument, "step cdf: masses must sum to 1");

    double running = 0.0;
    for (std::size_t k : order) {
        double m = masses[k] / total;
        if (m == 0.0) continue;
        if (!breakpoints_.empty() && breakpoints_.back() == atom_values[k]) {
            cum_.back() += m;  // merge duplicate atom values
            running = cum_.back();
            continue;
        }
        if (!std::isfinite(atom_values[k]))
            fail(ErrorCode::invalid_argument, "step cdf: atom values must be finite");
        breakpoints_.push_back(atom_values[k]);
        left_limits_.push_back(running);
        running += m;
        cum_.push_back(running);
    }
    cum_.back() = 1.0;
}

double StepCdf::cdf(double s) const {
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), s);
    if (it == breakpoints_.begin()) return 0.0;
    return cum_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double StepCdf::generalized_inverse(double t) const {
    if (!(t >= 0.0 && t <= 1.0))
        fail(ErrorCode::invalid_argument, "generalized_inverse: t must lie in [0, 1]");
    if (t == 0.0) return -kInf;  // every s satisfies F(s) >= 0, inf R = -inf
    auto it = std::lower_bound(cum_.begin(), cum_.end(), t);
    if (it == cum_.end()) return kInf;  // inf of the empty set
    return breakpoints_[static_cast<std::size_t>(it - cum_.begin())];
}

GridCopula::GridCopula(std::vector<double> u_lengths, std::vector<double> v_lengths,
                       std::vector<std::vector<double>> cell_mass)
    : u_lengths_(std::move(u_lengths)),
      v_lengths_(std::move(v_lengths)),
      cell_mass_(std::move(cell_mass)) {
    if (u_lengths_.empty() || v_lengths_.empty())
        fail(ErrorCode::invalid_argument, "grid copula: needs at least one cell");
    auto check_lengths = [](const std::vector<double>& len, const char* axis) {
        double total = 0.0;
        for (double a : len) {
            if (!(a > 0.0))
                fail(ErrorCode::invalid_argument,
                     std::string("grid copula: ") + axis + " increments must be positive");
            total += a;
        }
        if (std::fabs(total - 1.0) > 1e-9)
            fail(ErrorCode::invalid_argument,
                 std::string("grid copula: ") + axis + " increments must sum to 1");
    };
    check_lengths(u_lengths_, "u");
    check_lengths(v_lengths_, "v");

    if (cell_mass_.size() != u_lengths_.size())
        fail(ErrorCode::invalid_argument, "grid copula: cell rows must match u increments");
    std::vector<double> col_sum(v_lengths_.size(), 0.0);
    for (std::size_t i = 0; i < rows(); ++i) {
        if (cell_mass_[i].size() != v_lengths_.size())
            fail(ErrorCode::invalid_argument,
                 "grid copula: cell columns must match v increments");
        double row_sum = 0.0;
        for (std::size_t j = 0; j < cols(); ++j) {
            double m = cell_mass_[i][j];
            if (!(m >= 0.0) || !std::isfinite(m))
                fail(ErrorCode::invalid_argument, "grid copula: cell masses must be >= 0");
            row_sum += m;
            col_sum[j] += m;
        }
        if (std::fabs(row_sum - u_lengths_[i]) > 1e-12)
            fail(ErrorCode::invalid_argument,
                 "grid copula: row sums must equal the u increments (uniform marginals)");
    }
    for (std::size_t j = 0; j < cols(); ++j)
        if (std::fabs(col_sum[j] - v_lengths_[j]) > 1e-12)
            fail(ErrorCode::invalid_argument,
                 "grid copula: column sums must equal the v increments (uniform marginals)");
}

std::vector<double> GridCopula::u_breaks() const {
    std::vector<double> b(rows() + 1, 0.0);
    for (std::size_t i = 0; i < rows(); ++i) b[i + 1] = b[i] + u_lengths_[i];
    b.back() = 1.0;
    return b;
}

std::vector<double> GridCopula::v_breaks() const {
    std::vector<double> b(cols() + 1, 0.0);
    for (std::size_t j = 0; j < cols(); ++j) b[j + 1] = b[j] + v_lengths_[j];
    b.back() = 1.0;
    return b;
}

double GridCopula::cdf(double u, double v) const {
    u = std::clamp(u, 0.0, 1.0);
    v = std::clamp(v, 0.0, 1.0);
    std::vector<double> ub = u_breaks(), vb = v_breaks();
    double total = 0.0;
    for (std::size_t i = 0; i < rows(); ++i) {
        if (ub[i] >= u) break;
        double fu = std::min(u - ub[i], u_lengths_[i]) / u_lengths_[i];
        for (std::size_t j = 0; j < cols(); ++j) {
            if (vb[j] >= v) break;
            double fv = std::min(v - vb[j], v_lengths_[j]) / v_lengths_[j];
            total += cell_mass_[i][j] * fu * fv;
        }
    }
    return total;
}

namespace {

// maps this grid's breakpoints into a coarse partition; coarse_breaks must be
// a subset of fine_breaks (within tol)
std::vector<std::size_t> partition_map(const std::vector<double>& fine_breaks,
                                       const std::vector<double>& coarse_breaks, double tol) {
    std::vector<std::size_t> owner(fine_breaks.size() - 1);
    std::size_t c = 0;
    for (std::size_t f = 0; f + 1 < fine_breaks.size(); ++f) {
        while (c + 1 < coarse_breaks.size() - 1 &&
               fine_breaks[f] >= coarse_breaks[c + 1] - tol)
            ++c;
        owner[f] = c;
        if (fine_breaks[f + 1] > coarse_breaks[c + 1] + tol)
            fail(ErrorCode::invalid_argument,
                 "coarsen: coarse breakpoints are not a subset of the fine grid");
    }
    return owner;
}

} // namespace

GridCopula GridCopula::coarsen(const std::vector<double>& coarse_u_breaks,
                               const std::vector<double>& coarse_v_breaks, double tol) const {
    std::vector<std::size_t> row_owner = partition_map(u_breaks(), coarse_u_breaks, tol);
    std::vector<std::size_t> col_owner = partition_map(v_breaks(), coarse_v_breaks, tol);
    std::size_t m = coarse_u_breaks.size() - 1, n = coarse_v_breaks.size() - 1;
    std::vector<double> ul(m, 0.0), vl(n, 0.0);
    for (std::size_t i = 0; i < rows(); ++i) ul[row_owner[i]] += u_lengths_[i];
    for (std::size_t j = 0; j < cols(); ++j) vl[col_owner[j]] += v_lengths_[j];
    std::vector<std::vector<double>> mass(m, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            mass[row_owner[i]][col_owner[j]] += cell_mass_[i][j];
    return GridCopula(std::move(ul), std::move(vl), std::move(mass));
}

GridCopula checkerboard(const JointDistribution& J) {
    auto [px, py] = marginals(J);
    std::vector<std::size_t> keep_x, keep_y;
    for (std::size_t i = 0; i < px.size(); ++i)
        if (px.mass(i) > 0.0) keep_x.push_back(i);
    for (std::size_t j = 0; j < py.size(); ++j)
        if (py.mass(j) > 0.0) keep_y.push_back(j);

    std::vector<double> ul, vl;
    for (std::size_t i : keep_x) ul.push_back(px.mass(i));
    for (std::size_t j : keep_y) vl.push_back(py.mass(j));
    std::vector<std::vector<double>> mass(keep_x.size(), std::vector<double>(keep_y.size()));
    for (std::size_t a = 0; a < keep_x.size(); ++a)
        for (std::size_t b = 0; b < keep_y.size(); ++b)
            mass[a][b] = J.pmf(keep_x[a], keep_y[b]);
    return GridCopula(std::move(ul), std::move(vl), std::move(mass));
}

ExtReal grid_divergence(const GridCopula& C, const Generator& g) {
    // cells are atoms of a common discretization: Pi puts a_i b_j where C
    // puts r_ij, and the density ratio is constant on each cell
    KahanSum ac;
    bool ac_infinite = false;
    KahanSum singular;
    for (std::size_t i = 0; i < C.rows(); ++i)
        for (std::size_t j = 0; j < C.cols(); ++j) {
            double p = C.u_length(i) * C.v_length(j);
            double r = C.mass(i, j);
            if (r > 0.0) {
                double term = r * g(p / r);
                if (std::isinf(term)) ac_infinite = true; else ac.add(term);
            } else {
                singular.add(p);
            }
        }
    ExtReal ac_part = ac_infinite ? ExtReal::infinity() : ExtReal(ac.value());
    return ac_part + singular_product(g.conj_at_zero(), singular.value());
}

RandomizationScheme scheme_from_name(const std::string& name) {
    if (name == "shared") return RandomizationScheme::shared;
    if (name == "independent") return RandomizationScheme::independent_per_atom;
    if (name == "antithetic") return RandomizationScheme::antithetic;
    fail(ErrorCode::parse_error, "unknown randomization scheme: " + name);
}

const char* scheme_name(RandomizationScheme s) {
    switch (s) {
        case RandomizationScheme::shared: return "shared";
        case RandomizationScheme::independent_per_atom: return "independent";
        case RandomizationScheme::antithetic: return "antithetic";
    }
    return "?";
}

std::vector<SamplePoint> interpolating_sample(const JointDistribution& J,
                                              RandomizationScheme scheme, std::size_t n,
                                              std::uint64_t seed) {
    if (n == 0) fail(ErrorCode::invalid_argument, "interpolating_sample: n must be >= 1");
    auto [px, py] = marginals(J);

    // left cdf limits per atom, in label order
    std::vector<double> fx_left(J.rows()), fy_left(J.cols());
    double acc = 0.0;
    for (std::size_t i = 0; i < J.rows(); ++i) { fx_left[i] = acc; acc += px.mass(i); }
    acc = 0.0;
    for (std::size_t j = 0; j < J.cols(); ++j) { fy_left[j] = acc; acc += py.mass(j); }

    // cumulative cell masses, row-major, for inverse-cdf cell selection
    std::vector<double> cell_cum(J.rows() * J.cols());
    acc = 0.0;
    for (std::size_t i = 0; i < J.rows(); ++i)
        for (std::size_t j = 0; j < J.cols(); ++j) {
            acc += J.pmf(i, j);
            cell_cum[i * J.cols() + j] = acc;
        }
    cell_cum.back() = 1.0;

    // stream layout: 0 selects the cell; coordinate streams carry the atom
    // index so per-atom draws occupy distinct positions
    const std::uint64_t kXStream = std::uint64_t(1) << 32;
    const std::uint64_t kYStream = std::uint64_t(2) << 32;
    CounterRng rng(seed);

    std::vector<SamplePoint> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        double pick = rng.uniform_open_closed(k, 0);
        std::size_t cell = static_cast<std::size_t>(
            std::lower_bound(cell_cum.begin(), cell_cum.end(), pick) - cell_cum.begin());
        std::size_t i = cell / J.cols(), j = cell % J.cols();

        double t = 0.0, w = 0.0;
        switch (scheme) {
            case RandomizationScheme::shared:
                t = rng.uniform_open_closed(k, kXStream);
                w = rng.uniform_open_closed(k, kYStream);
                break;
            case RandomizationScheme::independent_per_atom:
                t = rng.uniform_open_closed(k, kXStream | i);
                w = rng.uniform_open_closed(k, kYStream | j);
                break;
            case RandomizationScheme::antithetic:
                t = rng.uniform_open_closed(k, kXStream);
                w = 1.0 - t;
                break;
        }
        out.push_back({fx_left[i] + px.mass(i) * t, fy_left[j] + py.mass(j) * w});
    }
    return out;
}

FgmCopula::FgmCopula(double theta) : theta_(theta) {
    if (!(theta >= -1.0 && theta <= 1.0))
        fail(ErrorCode::constraint, "fgm: theta must lie in [-1, 1]");
}

double FgmCopula::cdf(double u, double v) const {
    return u * v * (1.0 + theta_ * (1.0 - u) * (1.0 - v));
}

double FgmCopula::density(double u, double v) const {
    // grouped so the theta = +-1 corner zeros come out as sums of
    // nonnegative products instead of cancellations
    if (theta_ >= 0.0)
        return (1.0 - theta_) + 2.0 * theta_ * ((1.0 - u) * (1.0 - v) + u * v);
    return (1.0 + theta_) - 2.0 * theta_ * (u * (1.0 - v) + v * (1.0 - u));
}

FgmCopula fgm_fit_bernoulli(double p, double q, double r) {
    if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0))
        fail(ErrorCode::constraint, "fgm fit: p and q must lie in (0, 1)");
    double lower = std::max(p + q - 1.0, 0.0);
    if (!(r > lower && r < std::min(p, q)))
        fail(ErrorCode::constraint, "fgm fit: requires (p+q-1)_+ < r < min(p, q)");
    double theta = (r - p * q) / (p * q * (1.0 - p) * (1.0 - q));
    if (!(theta >= -1.0 && theta <= 1.0))
        fail(ErrorCode::constraint, "fgm fit: computed theta falls outside [-1, 1]");
    FgmCopula c(theta);
    double rho = 1.0 - p - q + r;
    if (std::fabs(c.cdf(1.0 - p, 1.0 - q) - rho) > 1e-12)
        fail(ErrorCode::constraint, "fgm fit: fitted copula does not reproduce the joint");
    return c;
}

namespace {

// graded axis map u = s - sin(2 pi s)/(2 pi); du = 1 - cos(2 pi s). Smooth,
// increasing, and flat to second order at both endpoints, which restores
// spectral convergence against the corner zeros of the FGM density.
double fgm_quadrature_pass(const FgmCopula& C, const Generator& g, int order) {
    GaussLegendreRule rule = gauss_legendre(order);
    std::vector<double> u(order), du(order);
    for (int k = 0; k < order; ++k) {
        double s = 0.5 * (rule.nodes[k] + 1.0);
        u[k] = s - std::sin(kTwoPi * s) / kTwoPi;
        du[k] = (1.0 - std::cos(kTwoPi * s)) * 0.5 * rule.weights[k];
    }
    KahanSum sum;
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            double c = C.density(u[a], u[b]);
            if (c <= 0.0) continue;  // measure-zero corner, Pi-a.e. irrelevant
            sum.add(du[a] * du[b] * g(1.0 / c) * c);
        }
    return sum.value();
}

} // namespace

QuadratureResult fgm_divergence_quadrature(const FgmCopula& C, const Generator& g, int order) {
    if (order < 16)
        fail(ErrorCode::invalid_argument, "fgm quadrature: order must be >= 16");
    QuadratureResult r;
    double coarse = fgm_quadrature_pass(C, g, order / 2);
    r.value = fgm_quadrature_pass(C, g, order);
    r.successive_diff = std::fabs(r.value - coarse);
    r.converged = r.successive_diff <= 1e-5;
    return r;
}

double fgm_pearson_closed_form(double theta) {
    if (!(theta >= -1.0 && theta <= 1.0))
        fail(ErrorCode::constraint, "fgm closed form: theta must lie in [-1, 1]");
    if (theta == 0.0) return 0.0;
    return (dilog(theta) - dilog(-theta)) / (2.0 * theta) - 1.0;
}

bool minimality_check(const JointDistribution& J, const std::vector<GridCopula>& candidates,
                      const Generator& g) {
    GridCopula cb = checkerboard(J);
    std::vector<double> ub = cb.u_breaks(), vb = cb.v_breaks();
    ExtReal cb_value = grid_divergence(cb, g);
    for (const GridCopula& cand : candidates) {
        GridCopula coarse = cand.coarsen(ub, vb);
        if (coarse.rows() != cb.rows() || coarse.cols() != cb.cols())
            fail(ErrorCode::invalid_argument, "minimality: candidate grid does not refine J");
        for (std::size_t i = 0; i < cb.rows(); ++i)
            for (std::size_t j = 0; j < cb.cols(); ++j)
                if (std::fabs(coarse.mass(i, j) - cb.mass(i, j)) > 1e-12)
                    fail(ErrorCode::invalid_argument,
                         "minimality: candidate does not reproduce the joint cell masses");
        if (!leq_with_tol(cb_value, grid_divergence(cand, g), 1e-10)) return false;
    }
    return true;
}

} // namespace divkit
