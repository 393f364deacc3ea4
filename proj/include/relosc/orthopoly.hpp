#pragma once

#include <vector>

#include "relosc/specfun.hpp"

namespace relosc {

/// Parameters (a, b, c) of the continuous dual Hahn polynomial S_n(x^2; a, b, c).
struct CdhParams {
    Complex a;
    Complex b;
    Complex c;
};

/// Highest polynomial degree accepted by the evaluators below.
inline constexpr unsigned kMaxPolynomialDegree = 64;

/// S_n(x^2; a, b, c) from its terminating 3F2 sum, accumulated with
/// compensated summation. Throws ParameterError when (a+b)_k or (a+c)_k
/// vanishes for some k <= n.
Complex cdh_series(unsigned n, Complex x_sq, const CdhParams& p);

/// S_n(x^2; a, b, c) from the three-term recurrence of the monic-normalized
/// polynomials, rescaled by (a+b)_n (a+c)_n. Depends on x only through x^2.
Complex cdh_recurrence(unsigned n, Complex x_sq, const CdhParams& p);

/// S_0 .. S_n at one point, from the same recurrence as cdh_recurrence.
std::vector<Complex> cdh_recurrence_sequence(unsigned n, Complex x_sq, const CdhParams& p);

/// Meixner-Pollaczek polynomial P_n^lambda(x; phi) in the Askey-scheme
/// normalization, P_1 = 2 (x sin phi + lambda cos phi). Requires 0 < phi < pi.
Complex meixner_pollaczek(unsigned n, Complex x, Complex lambda, double phi);

/// Associated Laguerre polynomial L_n^d(y).
double laguerre(unsigned n, double d, double y);

}  // namespace relosc
