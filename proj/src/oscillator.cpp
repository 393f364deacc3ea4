#include "relosc/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "relosc/errors.hpp"
#include "relosc/orthopoly.hpp"

namespace relosc {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

[[noreturn]] void throw_collapse(const char* who, double g_crit) {
    throw CollapseError(std::string(who) +
                            ": coupling below the hermiticity bound g_crit = " +
                            std::to_string(g_crit),
                        g_crit);
}

// Positive integer value of alpha, if any; Gamma(i rho + k) / Gamma(i rho)
// is then the polynomial (i rho)_k with no poles to step around.
std::optional<unsigned> integer_alpha(Complex alpha) {
    if (alpha.imag() != 0.0) {
        return std::nullopt;
    }
    const double r = alpha.real();
    if (r >= 1.0 && r <= 64.0 && r == std::floor(r)) {
        return static_cast<unsigned>(r);
    }
    return std::nullopt;
}

}  // namespace

OscillatorParams::OscillatorParams(double m, double omega, double g, double c, double hbar)
    : m_(m), omega_(omega), g_(g), c_(c), hbar_(hbar) {
    if (!positive_finite(m) || !positive_finite(omega) || !positive_finite(c) ||
        !positive_finite(hbar)) {
        throw ParameterError("OscillatorParams: m, omega, c and hbar must be finite and positive");
    }
    if (!std::isfinite(g)) {
        throw ParameterError("OscillatorParams: g must be finite");
    }
}

OscillatorParams OscillatorParams::natural(double g, double c) {
    return {1.0, 1.0, g, c, 1.0};
}

std::string_view to_string(Regime r) noexcept {
    switch (r) {
        case Regime::Real: return "real";
        case Regime::ComplexConjugate: return "complex_conjugate";
        case Regime::Collapse: return "collapse";
    }
    return "unknown";
}

double critical_coupling(const OscillatorParams& params) noexcept {
    const double hbar_sq_over_m = params.hbar() * params.hbar() / params.m();
    const double w0 = params.omega0();
    return -hbar_sq_over_m / 8.0 - hbar_sq_over_m * w0 * w0 / 32.0;
}

Regime classify_regime(const OscillatorParams& params) noexcept {
    const double w0 = params.omega0();
    const double g0 = params.g0();
    if (1.0 - 8.0 * g0 * w0 * w0 < 0.0) {
        return Regime::ComplexConjugate;
    }
    if (g0 < -0.125 - w0 * w0 / 32.0) {
        return Regime::Collapse;
    }
    return Regime::Real;
}

SpectralSolution compute_alpha_nu(const OscillatorParams& params) {
    const double w0 = params.omega0();
    const double g0 = params.g0();
    const double disc = 1.0 - 8.0 * g0 * w0 * w0;

    SpectralSolution sol;
    sol.regime = classify_regime(params);
    sol.omega0 = w0;
    sol.nu_prime = 0.5 + std::sqrt(0.25 + 1.0 / (w0 * w0));
    if (1.0 + 8.0 * g0 >= 0.0) {
        sol.d = 0.5 * std::sqrt(1.0 + 8.0 * g0);
    }

    // alpha's radicand 1 + (2/w0^2)(1 - s) is rewritten as 1 + 16 g0 / (1 + s)
    // so that it stays accurate when 1/w0^2 is huge.
    switch (sol.regime) {
        case Regime::Real: {
            const double s = std::sqrt(std::max(disc, 0.0));
            const double rad_alpha = std::max(1.0 + 16.0 * g0 / (1.0 + s), 0.0);
            sol.alpha = 0.5 + 0.5 * std::sqrt(rad_alpha);
            sol.nu = 0.5 + 0.5 * std::sqrt(1.0 + 2.0 / (w0 * w0) * (1.0 + s));
            break;
        }
        case Regime::ComplexConjugate: {
            const Complex s = std::sqrt(Complex(disc, 0.0));
            sol.nu = 0.5 + 0.5 * std::sqrt(1.0 + 2.0 / (w0 * w0) * (1.0 + s));
            sol.alpha = std::conj(sol.nu);
            break;
        }
        case Regime::Collapse: {
            const double s = std::sqrt(disc);
            const Complex rad_alpha(1.0 + 16.0 * g0 / (1.0 + s), 0.0);
            sol.alpha = 0.5 + 0.5 * std::sqrt(rad_alpha);
            sol.nu = 0.5 + 0.5 * std::sqrt(1.0 + 2.0 / (w0 * w0) * (1.0 + s));
            break;
        }
    }
    return sol;
}

Complex energy_level(unsigned n, const OscillatorParams& params) {
    const SpectralSolution sol = compute_alpha_nu(params);
    const Complex e = params.quantum() * (2.0 * n + sol.alpha_plus_nu());
    if (sol.regime == Regime::Collapse) {
        return e;
    }
    return {e.real(), 0.0};
}

Complex binding_energy(unsigned n, const OscillatorParams& params) {
    const SpectralSolution sol = compute_alpha_nu(params);
    const double w0 = params.omega0();
    const double g0 = params.g0();
    const Complex s = std::sqrt(Complex(1.0 - 8.0 * g0 * w0 * w0, 0.0));
    const double mu = params.mu();
    const Complex root = std::sqrt(1.0 + 2.0 * mu * mu * (1.0 + s));
    // nu - mu = 1/2 + (1 - 16 g0 / (1 + s)) / (2 (root + 2 mu))
    const Complex nu_minus_mu = 0.5 + 0.5 * (1.0 - 16.0 * g0 / (1.0 + s)) / (root + 2.0 * mu);
    const Complex e = params.quantum() * (2.0 * n + sol.alpha + nu_minus_mu);
    if (sol.regime == Regime::Collapse) {
        return e;
    }
    return {e.real(), 0.0};
}

double normalization(unsigned n, const SpectralSolution& sol) {
    if (sol.regime == Regime::Collapse) {
        throw CollapseError("normalization: undefined in the collapse regime",
                            std::numeric_limits<double>::quiet_NaN());
    }
    const double nd = static_cast<double>(n);
    const Complex log_product = ln_gamma(nd + sol.alpha + sol.nu) +
                                ln_gamma(nd + sol.alpha + 0.5) + ln_gamma(nd + sol.nu + 0.5) +
                                ln_gamma(nd + 1.0);
    // The product is real and positive for real or conjugate (alpha, nu).
    return std::exp(0.5 * (std::log(2.0) - log_product.real()));
}

Complex rho_rising_square(Complex rho) noexcept { return rho * (rho + kI); }

Complex WavefunctionEvaluation::recombined() const {
    return std::exp(std::log(factors.c_n) + factors.log_generalized_degree +
                    factors.log_m_factor) *
           factors.polynomial;
}

WavefunctionEvaluation wavefunction(unsigned n, Complex rho, const OscillatorParams& params) {
    return wavefunction(n, rho, params, compute_alpha_nu(params));
}

WavefunctionEvaluation wavefunction(unsigned n, Complex rho, const OscillatorParams& params,
                                    const SpectralSolution& sol) {
    if (sol.regime == Regime::Collapse) {
        throw_collapse("wavefunction", critical_coupling(params));
    }
    const Complex alpha = sol.alpha;
    const Complex nu = sol.nu;
    const Complex irho = kI * rho;
    const double nd = static_cast<double>(n);
    const double log_w0 = std::log(params.omega0());

    WavefunctionEvaluation out;
    out.rho = rho;
    out.factors.c_n = normalization(n, sol);
    out.factors.polynomial = cdh_recurrence(n, rho * rho, {alpha, nu, 0.5});

    const Complex phase = kI * (std::numbers::pi * alpha.real() / 2.0);
    if (const auto k = integer_alpha(alpha)) {
        out.factors.log_generalized_degree = phase + principal_log(pochhammer(irho, *k));
    } else if (is_nonpositive_integer(irho)) {
        out.factors.log_generalized_degree =
            Complex(-std::numeric_limits<double>::infinity(), 0.0);
    } else {
        out.factors.log_generalized_degree = phase + ln_gamma_ratio(irho, alpha);
    }
    const Complex exponent = irho * log_w0;
    out.factors.log_m_factor = exponent + ln_gamma(nu + irho);

    if (std::isinf(out.factors.log_generalized_degree.real())) {
        out.value = 0.0;
        return out;
    }
    // c_n * Gamma(nu + i rho), with Gamma(nu + i rho) split between the two
    // nu-dependent gammas of c_n so that large nu cancels before exponentiation.
    const Complex log_cn_m =
        0.5 * (std::log(2.0) - ln_gamma(nd + alpha + 0.5) - ln_gamma(nd + 1.0)) +
        0.5 * ln_gamma_ratio(nd + alpha + nu, irho - nd - alpha) +
        0.5 * ln_gamma_ratio(nd + nu + 0.5, irho - nd - 0.5);
    out.value = std::exp(log_cn_m + exponent + out.factors.log_generalized_degree) *
                out.factors.polynomial;
    return out;
}

double nonrel_exponent(const OscillatorParams& params) {
    const double rad = 1.0 + 8.0 * params.g0();
    if (rad < 0.0) {
        throw ComplexExponentError("non-relativistic exponent d is complex for g0 < -1/8");
    }
    return 0.5 * std::sqrt(rad);
}

double nonrel_wavefunction(unsigned n, double x, const OscillatorParams& params) {
    const double d = nonrel_exponent(params);
    if (!(x >= 0.0)) {
        throw ParameterError("nonrel_wavefunction: x must be >= 0");
    }
    if (x == 0.0) {
        return 0.0;
    }
    const double k = params.m() * params.omega() / params.hbar();
    const double nd = static_cast<double>(n);
    const double log_norm =
        0.5 * (std::log(2.0) + (d + 1.0) * std::log(k) + std::lgamma(nd + 1.0) -
               std::lgamma(d + nd + 1.0));
    const double y = k * x * x;
    return std::exp(log_norm + (d + 0.5) * std::log(x) - 0.5 * y) * laguerre(n, d, y);
}

double nonrel_energy(unsigned n, const OscillatorParams& params) {
    return params.quantum() * (2.0 * n + nonrel_exponent(params) + 1.0);
}

Complex nonrel_energy_continued(unsigned n, const OscillatorParams& params) noexcept {
    const Complex d = 0.5 * std::sqrt(Complex(1.0 + 8.0 * params.g0(), 0.0));
    return params.quantum() * (2.0 * n + d + 1.0);
}

RelativisticOscillatorState relosc_reference(unsigned n, Complex rho,
                                             const OscillatorParams& params) {
    const double w0 = params.omega0();
    const double nu_p = 0.5 + std::sqrt(0.25 + 1.0 / (w0 * w0));
    const unsigned degree = 2 * n + 1;
    const double log_cn = nu_p * std::log(2.0) +
                          0.5 * (std::lgamma(degree + 1.0) -
                                 std::log(2.0 * std::numbers::pi * params.lambda()) -
                                 std::lgamma(degree + nu_p));
    // [nu'(nu'-1)]^(-i rho/2) equals omega0^(i rho).
    const Complex log_phase = -0.5 * kI * rho * std::log(nu_p * (nu_p - 1.0));

    RelativisticOscillatorState out;
    out.energy = params.quantum() * (2.0 * n + 1.0 + nu_p);
    out.wavefunction = std::exp(log_cn + log_phase + ln_gamma(nu_p + kI * rho)) *
                       meixner_pollaczek(degree, rho, nu_p, std::numbers::pi / 2.0);
    return out;
}

}  // namespace relosc
