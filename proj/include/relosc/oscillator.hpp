#pragma once

#include <optional>
#include <string_view>

#include "relosc/specfun.hpp"

namespace relosc {

/// Physical constants of the oscillator. Only the five primitives are
/// stored; the dimensionless combinations are recomputed on access.
class OscillatorParams {
public:
    /// Defaults to the unit system m = omega = hbar = 1 with c = 4, g = 1.
    OscillatorParams() = default;

    /// Throws ParameterError unless m, omega, c, hbar are finite and > 0
    /// and g is finite.
    OscillatorParams(double m, double omega, double g, double c, double hbar);

    /// m = omega = hbar = 1.
    static OscillatorParams natural(double g, double c);

    double m() const noexcept { return m_; }
    double omega() const noexcept { return omega_; }
    double g() const noexcept { return g_; }
    double c() const noexcept { return c_; }
    double hbar() const noexcept { return hbar_; }

    /// Compton wavelength hbar / (m c).
    double lambda() const noexcept { return hbar_ / (m_ * c_); }
    /// hbar omega / (m c^2).
    double omega0() const noexcept { return hbar_ * omega_ / (m_ * c_ * c_); }
    /// m g / hbar^2.
    double g0() const noexcept { return m_ * g_ / (hbar_ * hbar_); }
    /// m c^2 / (hbar omega) = 1 / omega0.
    double mu() const noexcept { return m_ * c_ * c_ / (hbar_ * omega_); }
    /// Rest energy m c^2.
    double rest_energy() const noexcept { return m_ * c_ * c_; }
    /// Energy quantum hbar omega.
    double quantum() const noexcept { return hbar_ * omega_; }

    OscillatorParams with_g(double g) const { return {m_, omega_, g, c_, hbar_}; }
    OscillatorParams with_c(double c) const { return {m_, omega_, g_, c, hbar_}; }

private:
    double m_ = 1.0;
    double omega_ = 1.0;
    double g_ = 1.0;
    double c_ = 4.0;
    double hbar_ = 1.0;
};

enum class Regime {
    Real,              ///< alpha, nu real
    ComplexConjugate,  ///< nu = conj(alpha), spectrum still real
    Collapse,          ///< hermiticity lost, E_n complex
};

std::string_view to_string(Regime r) noexcept;

struct SpectralSolution {
    Complex alpha;
    Complex nu;
    Regime regime = Regime::Real;
    /// Non-relativistic exponent sqrt(1 + 8 g0) / 2; empty when g0 < -1/8.
    std::optional<double> d;
    /// nu' = 1/2 + sqrt(1/4 + 1/omega0^2), the g = 0 oscillator parameter.
    double nu_prime = 0.0;
    double omega0 = 0.0;
    /// alpha + nu; exactly real outside the collapse regime.
    Complex alpha_plus_nu() const noexcept { return alpha + nu; }
};

/// Collapse threshold g_crit = -hbar^2/(8m) - hbar^2 omega0^2/(32m).
double critical_coupling(const OscillatorParams& params) noexcept;

Regime classify_regime(const OscillatorParams& params) noexcept;

/// alpha and nu from the quadratic relation that removes the potential from
/// the difference equation for the polynomial part of the wavefunction.
SpectralSolution compute_alpha_nu(const OscillatorParams& params);

/// E_n = hbar omega (2n + alpha + nu). Complex in the collapse regime.
Complex energy_level(unsigned n, const OscillatorParams& params);

/// E_n - m c^2, evaluated without cancellation for large m c^2 / (hbar omega).
Complex binding_energy(unsigned n, const OscillatorParams& params);

/// c_n = sqrt(2 / (Gamma(n+alpha+nu) Gamma(n+alpha+1/2) Gamma(n+nu+1/2) n!)).
/// Throws CollapseError in the collapse regime.
double normalization(unsigned n, const SpectralSolution& sol);

/// rho (rho + i).
Complex rho_rising_square(Complex rho) noexcept;

struct WavefunctionEvaluation {
    Complex rho;
    Complex value;
    struct Factors {
        /// log of (-rho)^(alpha) = i^alpha Gamma(i rho + alpha) / Gamma(i rho);
        /// -inf real part when 1/Gamma(i rho) vanishes.
        Complex log_generalized_degree;
        /// log of M(rho) = omega0^(i rho) Gamma(nu + i rho).
        Complex log_m_factor;
        /// Omega(rho) = S_n(rho^2; alpha, nu, 1/2).
        Complex polynomial;
        double c_n = 0.0;
    } factors;

    Complex generalized_degree() const { return std::exp(factors.log_generalized_degree); }
    Complex m_factor() const { return std::exp(factors.log_m_factor); }
    /// c_n * (-rho)^(alpha) * M(rho) * Omega(rho) from the stored factors.
    Complex recombined() const;
};

/// psi_n(rho) = c_n (-rho)^(alpha) omega0^(i rho) Gamma(nu + i rho) S_n(rho^2; alpha, nu, 1/2),
/// normalized on rho in [0, inf). i^alpha is taken as the unimodular phase
/// exp(i pi Re(alpha) / 2), which equals the principal value for real alpha.
/// Throws CollapseError in the collapse regime and PoleError if rho hits a
/// pole of Gamma(i rho + alpha) or Gamma(nu + i rho).
WavefunctionEvaluation wavefunction(unsigned n, Complex rho, const OscillatorParams& params);
WavefunctionEvaluation wavefunction(unsigned n, Complex rho, const OscillatorParams& params,
                                    const SpectralSolution& sol);

/// Non-relativistic exponent d; throws ComplexExponentError when g0 < -1/8.
double nonrel_exponent(const OscillatorParams& params);

/// Non-relativistic eigenfunction on x >= 0.
double nonrel_wavefunction(unsigned n, double x, const OscillatorParams& params);

/// hbar omega (2n + d + 1).
double nonrel_energy(unsigned n, const OscillatorParams& params);

/// hbar omega (2n + d + 1) with d continued to complex values below g0 = -1/8.
Complex nonrel_energy_continued(unsigned n, const OscillatorParams& params) noexcept;

struct RelativisticOscillatorState {
    double energy = 0.0;
    Complex wavefunction;
};

/// Eigenpair of the g = 0 relativistic oscillator in the Meixner-Pollaczek
/// form; only omega0, lambda and hbar omega of params are used.
RelativisticOscillatorState relosc_reference(unsigned n, Complex rho,
                                             const OscillatorParams& params);

}  // namespace relosc
