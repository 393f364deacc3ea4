#pragma once

#include <complex>
#include <cstdint>

namespace relosc {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Principal logarithm with Im in (-pi, pi]. A negative zero imaginary part
/// is treated as +0, so log(-x) = ln x + i pi for real x > 0.
Complex principal_log(Complex z);

/// z^w := exp(w * principal_log(z)).
Complex principal_pow(Complex z, Complex w);

/// log(1 + u) accurate for small |u|.
Complex log1p(Complex u);

/// Log-gamma for complex argument.
///
/// Returns the branch that is analytic on C minus (-inf, 0] and real on the
/// positive real axis (the usual "loggamma"), so exp(ln_gamma(z)) == Gamma(z),
/// ln_gamma(conj z) == conj(ln_gamma(z)), and the result is continuous along
/// every vertical line that does not cross the negative real axis.
///
/// Throws PoleError for z in {0, -1, -2, ...}.
Complex ln_gamma(Complex z);

/// ln Gamma(z + shift) - ln Gamma(z) on the same branch as ln_gamma.
/// Uses a differenced Stirling series when both arguments are large, which
/// keeps the result accurate even when each gamma alone would overflow.
Complex ln_gamma_ratio(Complex z, Complex shift);

/// Gamma(z + shift) / Gamma(z).
Complex gamma_ratio(Complex z, Complex shift);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
Complex pochhammer(Complex a, unsigned n);

/// Binomial coefficient C(n, m), exact for n <= 64; 0 when m < 0 or m > n.
/// Throws ParameterError for n > 64.
std::uint64_t binomial(unsigned n, int m);

/// True when z is exactly one of 0, -1, -2, ...
bool is_nonpositive_integer(Complex z) noexcept;

}  // namespace relosc
