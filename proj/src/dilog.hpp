#pragma once

namespace divkit {

/// Dilogarithm Li2(x) = sum_{k>=1} x^k / k^2 for x in [-1, 1], to absolute
/// error below 1e-13. Power series on |x| <= 1/2; reflection and Landen
/// identities move the argument into that range elsewhere; x = +-1 return
/// the exact constants pi^2/6 and -pi^2/12.
double dilog(double x);

} // namespace divkit
