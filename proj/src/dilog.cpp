#include "dilog.hpp"

#include <cmath>

#include "error.hpp"

namespace divkit {

namespace {

const double kPi = 3.14159265358979323846;

// plain series, valid for |x| <= 1/2 (converges geometrically)
double dilog_series(double x) {
    double term = x;
    double sum = x;
    for (int k = 2; k <= 200; ++k) {
        term *= x;
        double add = term / (static_cast<double>(k) * k);
        sum += add;
        if (std::fabs(add) < 1e-18) break;
    }
    return sum;
}

} // namespace

double dilog(double x) {
    if (!(x >= -1.0 && x <= 1.0))
        fail(ErrorCode::invalid_argument, "dilog: argument must lie in [-1, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return kPi * kPi / 6.0;
    if (x == -1.0) return -kPi * kPi / 12.0;
    if (std::fabs(x) <= 0.5) return dilog_series(x);
    if (x > 0.5) {
        // Li2(x) + Li2(1-x) = pi^2/6 - log(x) log(1-x)
        return kPi * kPi / 6.0 - std::log(x) * std::log1p(-x) - dilog_series(1.0 - x);
    }
    // x in (-1, -1/2): Landen, Li2(x) = -Li2(x/(x-1)) - log^2(1-x)/2,
    // with x/(x-1) in [1/3, 1/2]
    double l = std::log1p(-x);
    return -dilog_series(x / (x - 1.0)) - 0.5 * l * l;
}

} // namespace divkit
