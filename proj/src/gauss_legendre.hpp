#pragma once

#include <vector>

namespace divkit {

struct GaussLegendreRule {
    std::vector<double> nodes;    // ascending, in (-1, 1)
    std::vector<double> weights;  // sum to 2
};

/// n-point Gauss-Legendre rule on [-1, 1], Newton-refined to machine
/// precision (n <= 1024).
GaussLegendreRule gauss_legendre(int n);

} // namespace divkit
