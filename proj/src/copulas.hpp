#pragma once

#include <cstdint>

#include "dilog.hpp"
#include "divergence.hpp"

namespace divkit {

/// Step cdf of a distribution on the real line with finitely many atoms.
/// Zero-mass atoms are dropped; equal atom values are merged.
class StepCdf {
public:
    StepCdf(std::vector<double> atom_values, std::vector<double> masses);

    std::size_t size() const { return breakpoints_.size(); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& cum() const { return cum_; }
    const std::vector<double>& left_limits() const { return left_limits_; }
    double mass(std::size_t i) const { return cum_[i] - left_limits_[i]; }

    /// F(s).
    double cdf(double s) const;

    /// Generalized (cag-lad) inverse inf{s : F(s) >= t} with inf R = -inf
    /// and inf of the empty set = +inf. Pre: t in [0, 1].
    double generalized_inverse(double t) const;

private:
    std::vector<double> breakpoints_;
    std::vector<double> cum_;
    std::vector<double> left_limits_;
};

/// Piecewise-constant copula on a rectangular grid: cell (i,j) spans
/// (u_{i-1}, u_i] x (v_{j-1}, v_j] and carries mass r_ij with density
/// r_ij / (a_i b_j). Uniform marginals: row sums equal the u increments,
/// column sums the v increments. Increments are the primary representation,
/// breakpoints are their partial sums.
class GridCopula {
public:
    GridCopula(std::vector<double> u_lengths, std::vector<double> v_lengths,
               std::vector<std::vector<double>> cell_mass);

    std::size_t rows() const { return u_lengths_.size(); }
    std::size_t cols() const { return v_lengths_.size(); }
    double u_length(std::size_t i) const { return u_lengths_[i]; }
    double v_length(std::size_t j) const { return v_lengths_[j]; }
    double mass(std::size_t i, std::size_t j) const { return cell_mass_[i][j]; }
    double density(std::size_t i, std::size_t j) const {
        return cell_mass_[i][j] / (u_lengths_[i] * v_lengths_[j]);
    }

    /// Breakpoints 0 = b_0 < ... < b_m = 1 (final one snapped to 1).
    std::vector<double> u_breaks() const;
    std::vector<double> v_breaks() const;

    /// Copula cdf C(u, v).
    double cdf(double u, double v) const;

    /// Re-aggregate onto a coarser grid whose breakpoints are a subset of
    /// this copula's breakpoints (within tol).
    GridCopula coarsen(const std::vector<double>& coarse_u_breaks,
                       const std::vector<double>& coarse_v_breaks, double tol = 1e-12) const;

private:
    std::vector<double> u_lengths_;
    std::vector<double> v_lengths_;
    std::vector<std::vector<double>> cell_mass_;
};

/// The checkerboard copula of a discrete joint: breakpoints at the marginal
/// cdf values (zero-mass atoms dropped), each atom's mass spread uniformly
/// over its cell.
GridCopula checkerboard(const JointDistribution& J);

/// D_f(Pi || C) for a grid copula C: sum over cells of f(a_i b_j / r_ij) r_ij
/// plus f*(0) times the Pi-mass of the r_ij = 0 cells. Equals the Csiszar
/// index of the generating joint when C is its checkerboard copula.
ExtReal grid_divergence(const GridCopula& C, const Generator& g);

/// How the per-atom uniform randomizers of an interpolating copula are
/// coupled. `shared` reuses one uniform per coordinate (the checkerboard);
/// `independent_per_atom` draws a fresh uniform per atom; `antithetic`
/// drives the second coordinate with one minus the first coordinate's
/// shared uniform, which couples the two coordinates and realizes a
/// different interpolating copula.
enum class RandomizationScheme { shared, independent_per_atom, antithetic };

RandomizationScheme scheme_from_name(const std::string& name);
const char* scheme_name(RandomizationScheme s);

struct SamplePoint {
    double u;
    double v;
};

/// n draws from the interpolating copula of J under the given scheme.
/// Deterministic in (seed, index): sample k only consumes stream positions
/// keyed by k, so disjoint ranges concatenate reproducibly.
std::vector<SamplePoint> interpolating_sample(const JointDistribution& J,
                                              RandomizationScheme scheme, std::size_t n,
                                              std::uint64_t seed);

/// Farlie-Gumbel-Morgenstern copula C_theta(u,v) = uv (1 + theta (1-u)(1-v)).
class FgmCopula {
public:
    explicit FgmCopula(double theta);

    double theta() const { return theta_; }
    double cdf(double u, double v) const;
    /// 1 + theta (1-2u)(1-2v), evaluated in a cancellation-safe form.
    double density(double u, double v) const;

private:
    double theta_;
};

/// Fit an FGM copula to Bernoulli marginals with P(X=1)=p, P(Y=1)=q,
/// P(X=1,Y=1)=r: theta = (r - pq) / (pq(1-p)(1-q)). Requires p,q in (0,1),
/// (p+q-1)_+ < r < min(p,q) and the resulting theta in [-1,1].
FgmCopula fgm_fit_bernoulli(double p, double q, double r);

struct QuadratureResult {
    double value = 0.0;
    bool converged = false;
    double successive_diff = 0.0;  // |value(order) - value(order/2)|
};

/// D_f(Pi || C_theta) by tensor Gauss-Legendre quadrature of
/// f(1/c_theta) c_theta over the unit square. Each axis runs through the
/// sin-graded map s - sin(2 pi s)/(2 pi), which clusters nodes away from the
/// corner zeros of c_theta at |theta| = 1. Pre: order >= 16. The result is
/// flagged non-converged when the order and order/2 estimates disagree
/// beyond 1e-5.
QuadratureResult fgm_divergence_quadrature(const FgmCopula& C, const Generator& g, int order);

/// Closed form (2 theta)^{-1} (Li2(theta) - Li2(-theta)) - 1 for the Pearson
/// divergence D_P(Pi || C_theta); theta = 0 returns 0 by continuity.
double fgm_pearson_closed_form(double theta);

/// True iff the checkerboard divergence is minimal among the candidates:
/// every candidate must be a legal copula for J (its coarsening to J's atom
/// grid reproduces J's cell masses).
bool minimality_check(const JointDistribution& J, const std::vector<GridCopula>& candidates,
                      const Generator& g);

} // namespace divkit
