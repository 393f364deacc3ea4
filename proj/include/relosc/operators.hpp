#pragma once

#include <functional>
#include <vector>

#include "relosc/oscillator.hpp"
#include "relosc/specfun.hpp"

namespace relosc {

/// A closed-form function of a complex coordinate, analytic in the strip
/// |Im rho| <= 1. Shift operators act exactly: exp(a d/drho) f(rho) = f(rho + a).
using AnalyticFunction = std::function<Complex(Complex)>;

/// psi_n as an AnalyticFunction; the spectral solution is computed once.
AnalyticFunction eigenfunction(unsigned n, const OscillatorParams& params);

/// H / (m c^2) applied to f at rho:
///   (f(rho+i) + f(rho-i)) / 2 + (omega0^2 rho(rho+i) / 2 + g0 / (rho(rho+i))) f(rho+i).
/// Throws SingularPointError at rho in {0, -i}.
Complex apply_hamiltonian(const AnalyticFunction& f, Complex rho, const OscillatorParams& params);

enum class Ladder { Lowering, Raising };

/// Where the factor (nu +- i rho)(1 +- alpha/(i rho)) is evaluated relative
/// to the half shift exp((i/2) d/drho).
enum class LadderOrdering {
    /// a- shifts first (factor at rho + i/2), a+ multiplies first (factor at
    /// rho). The two operators are then mutual adjoints and a- psi_0 = 0.
    ShiftThenMultiply,
    /// The opposite placement for both operators; kept for comparison.
    MultiplyThenShift,
};

/// a- f(rho) = [f(rho - i/2) - omega0 (nu + i rho')(1 + alpha/(i rho')) f(rho + i/2)] / sqrt 2
///   with rho' = rho + i/2;
/// a+ f(rho) = [f(rho - i/2) - omega0 (nu - i rho)(1 - alpha/(i rho)) f(rho + i/2)] / sqrt 2.
/// Result is dimensionless; H = m c^2 (a+ a- + omega0 (alpha + nu)).
/// Throws SingularPointError when the factor's 1/(i rho) is evaluated at 0.
Complex apply_ladder(Ladder which, const AnalyticFunction& f, Complex rho,
                     const SpectralSolution& sol, const OscillatorParams& params,
                     LadderOrdering ordering = LadderOrdering::ShiftThenMultiply);

/// The function rho -> apply_ladder(which, f, rho, ...), for composing a+ a-.
AnalyticFunction ladder_action(Ladder which, AnalyticFunction f, const SpectralSolution& sol,
                               const OscillatorParams& params,
                               LadderOrdering ordering = LadderOrdering::ShiftThenMultiply);

/// Kinematics of a one-dimensional relativistic plane wave.
struct PlaneWaveState {
    double p = 0.0;         ///< momentum
    double p0 = 0.0;        ///< sqrt(p^2 + m^2 c^2)
    double rapidity = 0.0;  ///< ln((p0 + p) / (m c))
    double energy = 0.0;    ///< c p0
};

PlaneWaveState plane_wave_state(double p, const OscillatorParams& params);

/// xi(p, x) = exp(i x chi / lambda), analytic in complex x.
Complex plane_wave(double p, Complex x, const OscillatorParams& params);
Complex plane_wave(double p, double x, const OscillatorParams& params);

/// m c^2 cosh(i lambda d/dx) f = m c^2 (f(x + i lambda) + f(x - i lambda)) / 2.
Complex apply_free_hamiltonian(const AnalyticFunction& f, Complex x,
                               const OscillatorParams& params);

/// -m c sinh(i lambda d/dx) f = -m c (f(x + i lambda) - f(x - i lambda)) / 2.
Complex apply_momentum(const AnalyticFunction& f, Complex x, const OscillatorParams& params);

/// Coefficients e_0, e_2, ..., e_2n of Omega(rho) = sum e_2k (i rho)^2k from the
/// downward recursion with e_2n = 1 and energy eps_n = 2n + alpha + nu.
/// The odd coefficients vanish identically and are not stored. n <= 32.
std::vector<Complex> series_coefficients(unsigned n, const SpectralSolution& sol);

/// sum_k e_2k (i rho)^(2k).
Complex evaluate_series(const std::vector<Complex>& even_coefficients, Complex rho);

}  // namespace relosc
