#include "generators.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "error.hpp"

namespace divkit {

namespace {

std::string alpha_name(double a) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "alpha:%g", a);
    return buf;
}

Generator make_alpha(double a) {
    if (a == 0.0) {
        // continuity extension f0
        return Generator(alpha_name(a),
                         [](double t) { return -std::log(t) + (t - 1.0); },
                         ExtReal::infinity(), ExtReal(1.0), true, true);
    }
    if (a == 1.0) {
        // continuity extension f1 = f0*
        return Generator(alpha_name(a),
                         [](double t) { return t * std::log(t) + (1.0 - t); },
                         ExtReal(1.0), ExtReal::infinity(), true, true);
    }
    ExtReal at_zero = a > 0.0 ? ExtReal(1.0 / a) : ExtReal::infinity();
    ExtReal conj_at_zero = a < 1.0 ? ExtReal(1.0 / (1.0 - a)) : ExtReal::infinity();
    return Generator(alpha_name(a),
                     [a](double t) {
                         return (std::pow(t, a) - a * t - (1.0 - a)) / (a * (a - 1.0));
                     },
                     at_zero, conj_at_zero, true, true);
}

} // namespace

Generator builtin(const std::string& name, double alpha) {
    if (name == "kl")
        return Generator("kl", [](double t) { return t * std::log(t); },
                         ExtReal(0.0), ExtReal::infinity(), true, true);
    if (name == "kl-star")
        return Generator("kl-star", [](double t) { return -std::log(t); },
                         ExtReal::infinity(), ExtReal(0.0), true, true);
    if (name == "tv")
        return Generator("tv", [](double t) { return std::fabs(t - 1.0); },
                         ExtReal(1.0), ExtReal(1.0), true, false);
    if (name == "hellinger")
        return Generator("hellinger",
                         [](double t) {
                             double d = std::sqrt(t) - 1.0;
                             return d * d;
                         },
                         ExtReal(1.0), ExtReal(1.0), true, true);
    if (name == "pearson")
        return Generator("pearson", [](double t) { return t * t - 1.0; },
                         ExtReal(-1.0), ExtReal::infinity(), true, true);
    if (name == "neyman")
        return Generator("neyman", [](double t) { return 1.0 / t - t; },
                         ExtReal::infinity(), ExtReal(-1.0), true, true);
    if (name == "alpha") return make_alpha(alpha);
    if (name == "lecam")
        return Generator("lecam",
                         [](double t) {
                             double d = 1.0 - t;
                             return d * d / (2.0 * t + 2.0);
                         },
                         ExtReal(0.5), ExtReal(0.5), true, true);
    if (name == "js")
        return Generator("js",
                         [](double t) {
                             return t * std::log(2.0 * t / (t + 1.0)) +
                                    std::log(2.0 / (t + 1.0));
                         },
                         ExtReal(std::log(2.0)), ExtReal(std::log(2.0)), true, true);
    fail(ErrorCode::parse_error, "unknown generator name: " + name);
}

Generator generator_from_spec(const std::string& spec) {
    if (spec.rfind("alpha:", 0) == 0) {
        const std::string arg = spec.substr(6);
        char* end = nullptr;
        double a = std::strtod(arg.c_str(), &end);
        if (arg.empty() || end != arg.c_str() + arg.size() || !std::isfinite(a))
            fail(ErrorCode::parse_error, "bad alpha parameter in: " + spec);
        return builtin("alpha", a);
    }
    return builtin(spec);
}

Generator conjugate(const Generator& g) {
    std::string name = g.name();
    // strip a trailing '*' instead of stacking them, so (f*)* reads as f
    if (!name.empty() && name.back() == '*')
        name.pop_back();
    else
        name += '*';
    return Generator(name, [g](double t) { return t * g(1.0 / t); },
                     g.conj_at_zero(), g.at_zero(), g.strictly_convex_at_one(),
                     g.strictly_convex_on_positives(), g.domain_hint());
}

Generator affine_shift(const Generator& g, double c) {
    if (!std::isfinite(c)) fail(ErrorCode::invalid_argument, "affine shift must be finite");
    if (c == 0.0) return g;
    ExtReal at_zero = g.at_zero().is_infinite() ? ExtReal::infinity()
                                                : ExtReal(g.at_zero().value() - c);
    ExtReal conj = g.conj_at_zero().is_infinite() ? ExtReal::infinity()
                                                  : ExtReal(g.conj_at_zero().value() + c);
    return Generator(g.name() + "+affine",
                     [g, c](double t) { return g(t) + c * (t - 1.0); }, at_zero, conj,
                     g.strictly_convex_at_one(), g.strictly_convex_on_positives(),
                     g.domain_hint());
}

ExtReal sup_bound(const Generator& g) {
    return g.at_zero() + g.conj_at_zero();
}

} // namespace divkit
