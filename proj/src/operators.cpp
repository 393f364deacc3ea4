#include "relosc/operators.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "relosc/errors.hpp"

namespace relosc {

namespace {

// (nu + i r)(1 + alpha / (i r)) and its partner (nu - i r)(1 - alpha / (i r)).
Complex lowering_factor(Complex r, const SpectralSolution& sol) {
    const Complex ir = kI * r;
    if (ir == Complex(0.0)) {
        throw SingularPointError("apply_ladder: factor 1/(i rho) singular at rho = 0");
    }
    return (sol.nu + ir) * (1.0 + sol.alpha / ir);
}

Complex raising_factor(Complex r, const SpectralSolution& sol) {
    const Complex ir = kI * r;
    if (ir == Complex(0.0)) {
        throw SingularPointError("apply_ladder: factor 1/(i rho) singular at rho = 0");
    }
    return (sol.nu - ir) * (1.0 - sol.alpha / ir);
}

}  // namespace

AnalyticFunction eigenfunction(unsigned n, const OscillatorParams& params) {
    const SpectralSolution sol = compute_alpha_nu(params);
    return [n, params, sol](Complex rho) { return wavefunction(n, rho, params, sol).value; };
}

Complex apply_hamiltonian(const AnalyticFunction& f, Complex rho, const OscillatorParams& params) {
    const Complex r2 = rho_rising_square(rho);
    if (r2 == Complex(0.0)) {
        throw SingularPointError("apply_hamiltonian: rho (rho + i) vanishes");
    }
    const double w0 = params.omega0();
    const Complex forward = f(rho + kI);
    const Complex backward = f(rho - kI);
    return 0.5 * (forward + backward) + (0.5 * w0 * w0 * r2 + params.g0() / r2) * forward;
}

Complex apply_ladder(Ladder which, const AnalyticFunction& f, Complex rho,
                     const SpectralSolution& sol, const OscillatorParams& params,
                     LadderOrdering ordering) {
    const Complex half = 0.5 * kI;
    const bool factor_at_shifted_point =
        (which == Ladder::Lowering) == (ordering == LadderOrdering::ShiftThenMultiply);
    const Complex where = factor_at_shifted_point ? rho + half : rho;
    const Complex factor =
        which == Ladder::Lowering ? lowering_factor(where, sol) : raising_factor(where, sol);
    return (f(rho - half) - params.omega0() * factor * f(rho + half)) / std::numbers::sqrt2;
}

AnalyticFunction ladder_action(Ladder which, AnalyticFunction f, const SpectralSolution& sol,
                               const OscillatorParams& params, LadderOrdering ordering) {
    return [which, f = std::move(f), sol, params, ordering](Complex rho) {
        return apply_ladder(which, f, rho, sol, params, ordering);
    };
}

PlaneWaveState plane_wave_state(double p, const OscillatorParams& params) {
    const double mc = params.m() * params.c();
    PlaneWaveState s;
    s.p = p;
    s.p0 = std::hypot(p, mc);
    // ln((p0 + p)/(m c)) without cancellation for p << 0.
    s.rapidity = std::asinh(p / mc);
    s.energy = params.c() * s.p0;
    return s;
}

Complex plane_wave(double p, Complex x, const OscillatorParams& params) {
    const double chi = plane_wave_state(p, params).rapidity;
    return std::exp(kI * x * chi / params.lambda());
}

Complex plane_wave(double p, double x, const OscillatorParams& params) {
    return plane_wave(p, Complex(x, 0.0), params);
}

Complex apply_free_hamiltonian(const AnalyticFunction& f, Complex x,
                               const OscillatorParams& params) {
    const Complex step = kI * params.lambda();
    return params.rest_energy() * 0.5 * (f(x + step) + f(x - step));
}

Complex apply_momentum(const AnalyticFunction& f, Complex x, const OscillatorParams& params) {
    const Complex step = kI * params.lambda();
    return -params.m() * params.c() * 0.5 * (f(x + step) - f(x - step));
}

std::vector<Complex> series_coefficients(unsigned n, const SpectralSolution& sol) {
    if (n > 32) {
        throw ParameterError("series_coefficients: n must be <= 32");
    }
    if (sol.regime == Regime::Collapse) {
        throw CollapseError("series_coefficients: undefined in the collapse regime",
                            std::numeric_limits<double>::quiet_NaN());
    }
    const Complex a = sol.alpha;
    const Complex b = sol.nu;
    const Complex eps = 2.0 * n + a + b;
    std::vector<Complex> e(n + 1, Complex(0.0));
    e[n] = 1.0;
    for (unsigned j = n; j-- > 0;) {
        Complex rhs = 0.0;
        for (unsigned k = j + 1; k <= n; ++k) {
            const auto c_odd = static_cast<double>(binomial(2 * k, static_cast<int>(2 * j + 1)));
            const auto c_even = static_cast<double>(binomial(2 * k, static_cast<int>(2 * j)));
            const auto c_below = static_cast<double>(binomial(2 * k, static_cast<int>(2 * j) - 1));
            rhs += (a * b * c_odd + (a + b) * c_even + c_below) * e[k];
        }
        const Complex lhs = eps - a - b - 2.0 * j;
        if (lhs == Complex(0.0)) {
            throw ParameterError("series_coefficients: vanishing recursion denominator");
        }
        e[j] = rhs / lhs;
    }
    return e;
}

Complex evaluate_series(const std::vector<Complex>& even_coefficients, Complex rho) {
    const Complex t = (kI * rho) * (kI * rho);
    Complex acc = 0.0;
    for (auto it = even_coefficients.rbegin(); it != even_coefficients.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

}  // namespace relosc
