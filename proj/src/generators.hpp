#pragma once

#include <functional>
#include <string>

#include "ext_real.hpp"

namespace divkit {

/// A divergence generator: a proper convex function f on (0, inf) with
/// f(1) = 0 and 1 interior to dom(f). The boundary behaviour is carried as
/// stored limits, never by evaluating at 0 or +inf:
///   at_zero       = f(0+)            in (-inf, +inf]
///   conj_at_zero  = f*(0) = lim f(t)/t as t -> inf
class Generator {
public:
    Generator(std::string name,
              std::function<double(double)> eval,
              ExtReal at_zero,
              ExtReal conj_at_zero,
              bool strictly_convex_at_one,
              bool strictly_convex_on_positives,
              std::string domain_hint = "(0, inf)")
        : name_(std::move(name)),
          eval_(std::move(eval)),
          at_zero_(at_zero),
          conj_at_zero_(conj_at_zero),
          strictly_convex_at_one_(strictly_convex_at_one),
          strictly_convex_on_positives_(strictly_convex_on_positives),
          domain_hint_(std::move(domain_hint)) {}

    /// Evaluate f at t. Pre: t > 0. Boundary values go through the limits.
    double operator()(double t) const {
        assert(t > 0.0);
        return eval_(t);
    }

    const std::string& name() const { return name_; }
    ExtReal at_zero() const { return at_zero_; }
    ExtReal conj_at_zero() const { return conj_at_zero_; }
    bool strictly_convex_at_one() const { return strictly_convex_at_one_; }
    bool strictly_convex_on_positives() const { return strictly_convex_on_positives_; }
    const std::string& domain_hint() const { return domain_hint_; }

private:
    std::string name_;
    std::function<double(double)> eval_;
    ExtReal at_zero_;
    ExtReal conj_at_zero_;
    bool strictly_convex_at_one_;
    bool strictly_convex_on_positives_;
    std::string domain_hint_;
};

/// Builtin catalog. `name` is one of: kl, kl-star, tv, hellinger, pearson,
/// neyman, alpha, lecam, js. The alpha family takes its parameter
/// separately; alpha in {0,1} silently uses the continuity extensions
/// f0(t) = -log t + (t-1) and f1(t) = t log t + (1-t).
Generator builtin(const std::string& name, double alpha = 0.0);

/// Parse a CLI-style generator spec, e.g. "pearson" or "alpha:0.3".
Generator generator_from_spec(const std::string& spec);

/// The convex conjugate f*(t) = t f(1/t); swaps the stored boundary limits.
Generator conjugate(const Generator& g);

/// f(t) + c (t - 1). Stays in the generator family and leaves every
/// divergence value unchanged.
Generator affine_shift(const Generator& g, double c);

/// (f + f*)(0), the supremum of D_f, attained by mutually singular pairs.
ExtReal sup_bound(const Generator& g);

} // namespace divkit
