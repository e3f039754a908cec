#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace divkit {

/// A value in (-inf, +inf]. Divergences and generator boundary limits live
/// here; -inf and NaN are never legal.
class ExtReal {
public:
    ExtReal() : v_(0.0) {}
    ExtReal(double v) : v_(v) {
        assert(!std::isnan(v_));
        assert(v_ > -std::numeric_limits<double>::infinity());
    }

    static ExtReal infinity() {
        return ExtReal(std::numeric_limits<double>::infinity());
    }

    double value() const { return v_; }
    bool is_infinite() const { return std::isinf(v_); }
    bool is_finite() const { return !std::isinf(v_); }

    // +inf absorbs; finite + finite stays finite. IEEE addition already does
    // the right thing once NaN and -inf are excluded.
    ExtReal operator+(ExtReal o) const { return ExtReal(v_ + o.v_); }
    ExtReal& operator+=(ExtReal o) {
        v_ += o.v_;
        return *this;
    }

    friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
    friend bool operator!=(ExtReal a, ExtReal b) { return a.v_ != b.v_; }
    friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
    friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
    friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
    friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

private:
    double v_;
};

/// weight * mass with the singular-part convention 0 * (+inf) = 0.
/// Only the call sites that implement the "last term vanishes when the
/// singular mass is zero" rule may use this; plain products elsewhere must
/// not silently zero an infinity.
inline ExtReal singular_product(ExtReal weight, double mass) {
    assert(mass >= 0.0);
    if (mass == 0.0) return ExtReal(0.0);
    return ExtReal(weight.value() * mass);
}

/// |a - b| <= tol, treating +inf as equal only to +inf.
inline bool approx_equal(ExtReal a, ExtReal b, double tol) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return std::fabs(a.value() - b.value()) <= tol;
}

/// |a - b| <= tol * max(1, |a|, |b|). Identity checks between two different
/// evaluation orders need the relative cap: unbounded generators produce
/// values of any magnitude, and each route carries its own ulp-level
/// rounding.
inline bool approx_equal_rel(ExtReal a, ExtReal b, double tol) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    double scale = std::max({1.0, std::fabs(a.value()), std::fabs(b.value())});
    return std::fabs(a.value() - b.value()) <= tol * scale;
}

/// a <= b + tol with +inf comparing strictly: anything <= +inf, and +inf
/// exceeds every finite bound.
inline bool leq_with_tol(ExtReal a, ExtReal b, double tol) {
    if (b.is_infinite()) return true;
    if (a.is_infinite()) return false;
    return a.value() <= b.value() + tol;
}

/// Compensated (Kahan) accumulator for the deterministic divergence sums.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }

    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

} // namespace divkit
