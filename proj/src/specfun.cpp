#include "relosc/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "relosc/errors.hpp"

namespace relosc {

namespace {

// B_2k / (2k (2k - 1)) for k = 1..8.
constexpr std::array<double, 8> kStirlingCoefficients = {
    1.0 / 12.0,        -1.0 / 360.0,  1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,      -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
};

// Below this modulus the truncated Stirling series is not accurate to
// double precision in the closed right half-plane.
constexpr double kStirlingRadius = 17.0;

bool stirling_ok(Complex w) {
    return w.real() >= 0.0 && std::abs(w) >= kStirlingRadius;
}

Complex stirling_tail(Complex w) {
    const Complex r = 1.0 / w;
    const Complex r2 = r * r;
    Complex acc = kStirlingCoefficients.back();
    for (std::size_t k = kStirlingCoefficients.size() - 1; k-- > 0;) {
        acc = kStirlingCoefficients[k] + r2 * acc;
    }
    return r * acc;
}

Complex stirling_ln_gamma(Complex w) {
    const double half_ln_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return (w - 0.5) * principal_log(w) - w + half_ln_2pi + stirling_tail(w);
}

void require_finite(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw ParameterError(std::string(what) + ": non-finite argument");
    }
}

}  // namespace

bool is_nonpositive_integer(Complex z) noexcept {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex principal_log(Complex z) {
    if (z.imag() == 0.0) {
        z = Complex(z.real(), 0.0);
    }
    return std::log(z);
}

Complex principal_pow(Complex z, Complex w) {
    return std::exp(w * principal_log(z));
}

Complex log1p(Complex u) {
    if (std::abs(u) >= 0.1) {
        return principal_log(1.0 + u);
    }
    // Alternating series; 0.1^18 < 1e-17.
    Complex term = u;
    Complex acc = 0.0;
    for (int k = 1; k <= 18; ++k) {
        acc += term / static_cast<double>(k);
        term *= -u;
    }
    return acc;
}

Complex ln_gamma(Complex z) {
    require_finite(z, "ln_gamma");
    if (is_nonpositive_integer(z)) {
        throw PoleError("ln_gamma: pole of the gamma function at z = " +
                        std::to_string(z.real()));
    }
    if (stirling_ok(z)) {
        return stirling_ln_gamma(z);
    }
    // Walk right with Gamma(z) = Gamma(z + N) / (z (z+1) ... (z+N-1)).
    // Each principal log is analytic off (-inf, -k], so the sum stays on the
    // branch that is analytic off the negative real axis.
    Complex w = z;
    Complex log_product = 0.0;
    while (!stirling_ok(w)) {
        log_product += principal_log(w);
        w += 1.0;
    }
    return stirling_ln_gamma(w) - log_product;
}

Complex ln_gamma_ratio(Complex z, Complex shift) {
    require_finite(z, "ln_gamma_ratio");
    require_finite(shift, "ln_gamma_ratio");
    if (shift == Complex(0.0)) {
        if (is_nonpositive_integer(z)) {
            throw PoleError("ln_gamma_ratio: pole at z");
        }
        return 0.0;
    }
    const Complex target = z + shift;
    if (stirling_ok(z) && stirling_ok(target) && std::abs(shift) <= 0.5 * std::abs(z)) {
        // (z+s-1/2) ln(z+s) - (z-1/2) ln z - s, rearranged to avoid
        // cancellation between the two large logarithmic terms.
        return (z - 0.5) * log1p(shift / z) + shift * principal_log(target) - shift +
               (stirling_tail(target) - stirling_tail(z));
    }
    return ln_gamma(target) - ln_gamma(z);
}

Complex gamma_ratio(Complex z, Complex shift) {
    return std::exp(ln_gamma_ratio(z, shift));
}

Complex pochhammer(Complex a, unsigned n) {
    Complex acc = 1.0;
    for (unsigned k = 0; k < n; ++k) {
        acc *= a + static_cast<double>(k);
    }
    return acc;
}

std::uint64_t binomial(unsigned n, int m) {
    if (n > 64) {
        throw ParameterError("binomial: exact arithmetic limited to n <= 64");
    }
    if (m < 0 || static_cast<unsigned>(m) > n) {
        return 0;
    }
    // Pascal's triangle; every entry up to row 64 fits in 64 bits.
    std::array<std::uint64_t, 65> row{};
    row[0] = 1;
    for (unsigned r = 1; r <= n; ++r) {
        for (unsigned j = r; j > 0; --j) {
            row[j] += row[j - 1];
        }
    }
    return row[static_cast<unsigned>(m)];
}

}  // namespace relosc
