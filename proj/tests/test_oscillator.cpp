#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "relosc/errors.hpp"
#include "relosc/operators.hpp"
#include "relosc/orthopoly.hpp"
#include "relosc/oscillator.hpp"

using relosc::Complex;
using relosc::kI;
using relosc::OscillatorParams;
using relosc::Regime;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(OscillatorParams(-1.0, 1.0, 0.0, 1.0, 1.0), relosc::ParameterError);
    CHECK_THROWS_AS(OscillatorParams(1.0, 0.0, 0.0, 1.0, 1.0), relosc::ParameterError);
    CHECK_THROWS_AS(OscillatorParams(1.0, 1.0, std::nan(""), 1.0, 1.0), relosc::ParameterError);
    CHECK_THROWS_AS(OscillatorParams(1.0, 1.0, 0.0, std::numeric_limits<double>::infinity(), 1.0),
                    relosc::ParameterError);
    const OscillatorParams p(2.0, 3.0, 0.5, 4.0, 0.5);
    CHECK(p.lambda() == doctest::Approx(0.0625));
    CHECK(p.omega0() == doctest::Approx(1.5 / 32.0));
    CHECK(p.g0() == doctest::Approx(4.0));
    CHECK(p.mu() * p.omega0() == doctest::Approx(1.0));
}

TEST_CASE("alpha and nu satisfy the two defining relations") {
    // alpha(alpha-1) + nu(nu-1) = 1/omega0^2 and alpha(alpha-1) nu(nu-1) = 2 g0 / omega0^2
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ug(-1.0, 6.0);
    std::uniform_real_distribution<double> uc(0.25, 8.0);
    for (int i = 0; i < 500; ++i) {
        const auto p = OscillatorParams::natural(ug(rng), uc(rng));
        if (relosc::classify_regime(p) == Regime::Collapse) {
            continue;
        }
        const auto sol = relosc::compute_alpha_nu(p);
        const double w0 = p.omega0();
        const Complex pa = sol.alpha * (sol.alpha - 1.0);
        const Complex pn = sol.nu * (sol.nu - 1.0);
        CAPTURE(p.g());
        CAPTURE(p.c());
        CHECK(std::abs(pa + pn - 1.0 / (w0 * w0)) < 1e-12 / (w0 * w0));
        CHECK(std::abs(pa * pn - 2.0 * p.g0() / (w0 * w0)) < 1e-12 * (1.0 + std::abs(2.0 * p.g0())) / (w0 * w0 * w0 * w0));
        CHECK(std::abs(sol.alpha_plus_nu().imag()) < 1e-14);
    }
}

TEST_CASE("regimes") {
    const auto real = relosc::compute_alpha_nu(OscillatorParams::natural(0.5, 3.0));
    CHECK(real.regime == Regime::Real);
    CHECK(real.alpha.real() == doctest::Approx(1.62368156376059).epsilon(1e-13));
    CHECK(real.nu.real() == doctest::Approx(9.45752977908891).epsilon(1e-13));
    CHECK(real.alpha.imag() == 0.0);

    const auto conj = relosc::compute_alpha_nu(OscillatorParams::natural(3.0, 1.0));
    CHECK(conj.regime == Regime::ComplexConjugate);
    CHECK(conj.alpha == std::conj(conj.nu));
    CHECK(conj.alpha.real() == doctest::Approx(1.77719789094725).epsilon(1e-13));
    CHECK(conj.alpha.imag() == doctest::Approx(-0.938740886847969).epsilon(1e-13));

    const auto p = OscillatorParams::natural(-1.0, 1.0);
    CHECK(relosc::classify_regime(p) == Regime::Collapse);
    CHECK(relosc::critical_coupling(p) == doctest::Approx(-0.125 - 1.0 / 32.0));
    CHECK(relosc::energy_level(0, p).imag() != 0.0);
    CHECK_THROWS_AS(relosc::wavefunction(0, 1.0, p), relosc::CollapseError);
    try {
        relosc::wavefunction(0, 1.0, p);
    } catch (const relosc::CollapseError& e) {
        CHECK(e.g_crit() == doctest::Approx(-0.15625));
    }
}

TEST_CASE("g = 0 spectrum") {
    const auto p = OscillatorParams::natural(0.0, 2.0);
    const auto sol = relosc::compute_alpha_nu(p);
    CHECK(sol.alpha.real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sol.nu.real() == doctest::Approx(4.5311288741492748262).epsilon(1e-14));
    CHECK(sol.nu.real() == doctest::Approx(sol.nu_prime).epsilon(1e-14));
    CHECK(relosc::energy_level(0, p).real() == doctest::Approx(5.5311288741492748262).epsilon(1e-14));
    CHECK(relosc::energy_level(3, p).real() == doctest::Approx(11.5311288741492748262).epsilon(1e-14));
}

TEST_CASE("binding energy tracks E - mc^2 without cancellation") {
    for (double c : {0.5, 2.0, 10.0}) {
        const auto p = OscillatorParams::natural(0.7, c);
        CHECK(relosc::binding_energy(2, p).real() ==
              doctest::Approx(relosc::energy_level(2, p).real() - p.rest_energy()).epsilon(1e-11));
    }
    // E_0 - mc^2 -> d + 1 for c -> inf, here with d = 1/2.
    const auto big = OscillatorParams::natural(0.0, 1e6);
    CHECK(relosc::binding_energy(0, big).real() == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("normalization constant") {
    relosc::SpectralSolution sol;
    sol.alpha = 1.0;
    sol.nu = 2.0;
    CHECK(relosc::normalization(0, sol) == doctest::Approx(0.92131773192356127804).epsilon(1e-14));
    CHECK(relosc::normalization(0, sol) == doctest::Approx(std::sqrt(8.0 / (3.0 * std::numbers::pi))).epsilon(1e-14));
}

TEST_CASE("wavefunction against high-precision values") {
    struct Case {
        unsigned n;
        Complex rho;
        double g;
        double c;
        Complex expected;
    };
    const Case cases[] = {
        {2, 1.7, 0.5, 3.0, {0.034804048234005079872, -0.31532456468218186137}},
        {0, 2.3, 3.0, 1.0, {0.54641615853290029503, 0.37529533561271322177}},
        {3, {4.1, 0.3}, 1.0, 4.0, {0.093322315203864423735, -0.084279498853219758737}},
        {1, 0.9, 0.5, 0.5, {-0.16499984792633542548, -0.47395547870471071151}},
    };
    for (const auto& t : cases) {
        CAPTURE(t.n);
        CAPTURE(t.rho);
        const auto ev = relosc::wavefunction(t.n, t.rho, OscillatorParams::natural(t.g, t.c));
        CHECK(rel(ev.value, t.expected) < 1e-11);
    }
}

TEST_CASE("stored factors recombine to the value") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> ux(0.2, 12.0);
    std::uniform_real_distribution<double> uy(-0.5, 0.5);
    for (const auto& p : {OscillatorParams::natural(0.5, 3.0), OscillatorParams::natural(3.0, 1.0),
                          OscillatorParams::natural(-0.1, 2.0)}) {
        for (int i = 0; i < 50; ++i) {
            const Complex rho(ux(rng), uy(rng));
            for (unsigned n : {0u, 2u, 5u}) {
                const auto ev = relosc::wavefunction(n, rho, p);
                CHECK(rel(ev.recombined(), ev.value) < 1e-10);
            }
        }
    }
}

TEST_CASE("wavefunction vanishes at the origin and decays") {
    for (const auto& p : {OscillatorParams::natural(0.5, 3.0), OscillatorParams::natural(3.0, 1.0)}) {
        for (unsigned n = 0; n <= 4; ++n) {
            CHECK(std::abs(relosc::wavefunction(n, 0.0, p).value) == 0.0);
            const double far = std::abs(relosc::wavefunction(n, 50.0, p).value);
            const double near = std::abs(relosc::wavefunction(n, 20.0, p).value);
            // |psi|^2 ~ rho^p e^{-pi rho}
            CHECK(far < 1e-10 * near);
        }
    }
}

TEST_CASE("eigen-equation at random complex points") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ux(0.3, 10.0);
    std::uniform_real_distribution<double> uy(-0.4, 0.4);
    for (const auto& p : {OscillatorParams::natural(0.5, 3.0), OscillatorParams::natural(3.0, 1.0)}) {
        const auto sol = relosc::compute_alpha_nu(p);
        for (unsigned n : {0u, 1u, 4u}) {
            const auto f = relosc::eigenfunction(n, p);
            const Complex eps = p.omega0() * (2.0 * n + sol.alpha_plus_nu());
            for (int i = 0; i < 100; ++i) {
                const Complex rho(ux(rng), uy(rng));
                const Complex lhs = relosc::apply_hamiltonian(f, rho, p);
                const Complex rhs = eps * f(rho);
                CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(std::abs(rhs), 1e-300) + 1e-300);
            }
        }
    }
}

TEST_CASE("g = 0 reference oscillator") {
    const auto p = OscillatorParams::natural(0.0, 2.0);
    const double w0 = p.omega0();
    for (unsigned n = 0; n <= 3; ++n) {
        const auto f = [&](Complex rho) { return relosc::relosc_reference(n, rho, p).wavefunction; };
        const double eps = relosc::relosc_reference(n, 1.0, p).energy / p.rest_energy();
        for (double x : {0.4, 1.3, 3.7}) {
            const Complex rho(x, 0.2);
            CHECK(std::abs(relosc::apply_hamiltonian(f, rho, p) - eps * f(rho)) < 1e-10 * std::abs(f(rho)));
        }
        // Same state as the general eigenfunction up to a constant.
        const Complex r1 = f(1.1) / relosc::wavefunction(n, 1.1, p).value;
        const Complex r2 = f(Complex(2.9, 0.3)) / relosc::wavefunction(n, Complex(2.9, 0.3), p).value;
        CHECK(rel(r1, r2) < 1e-10);
    }

    // Gamma(rho + i nu') in place of Gamma(nu' + i rho) is not an eigenfunction.
    const double nu_p = relosc::compute_alpha_nu(p).nu_prime;
    const auto swapped = [&](Complex rho) {
        return std::exp(-0.5 * kI * rho * std::log(nu_p * (nu_p - 1.0)) + relosc::ln_gamma(rho + kI * nu_p)) *
               relosc::meixner_pollaczek(1, rho, nu_p, std::numbers::pi / 2.0);
    };
    const double eps0 = w0 * (1.0 + nu_p);
    const Complex rho(1.3, 0.2);
    CHECK(std::abs(relosc::apply_hamiltonian(swapped, rho, p) - eps0 * swapped(rho)) > 1e-2 * std::abs(swapped(rho)));
}

TEST_CASE("non-relativistic eigenfunctions") {
    const auto p = OscillatorParams::natural(0.0, 1.0);
    CHECK(relosc::nonrel_exponent(p) == 0.5);
    CHECK(relosc::nonrel_wavefunction(0, 1.0, p) == doctest::Approx(0.91116134402266506967).epsilon(1e-14));
    CHECK(relosc::nonrel_energy(1, p) == doctest::Approx(3.5));
    CHECK_THROWS_AS(relosc::nonrel_exponent(OscillatorParams::natural(-0.2, 1.0)), relosc::ComplexExponentError);
    CHECK(relosc::nonrel_energy_continued(0, OscillatorParams::natural(-0.25, 1.0)).imag() > 0.0);

    // Orthonormality by midpoint quadrature on [0, 12].
    const auto q = OscillatorParams(1.3, 0.8, 0.6, 1.0, 1.0);
    const int steps = 120000;
    const double h = 12.0 / steps;
    for (unsigned n = 0; n <= 3; ++n) {
        for (unsigned m = n; m <= 3; ++m) {
            double s = 0.0;
            for (int i = 0; i < steps; ++i) {
                const double x = (i + 0.5) * h;
                s += relosc::nonrel_wavefunction(n, x, q) * relosc::nonrel_wavefunction(m, x, q);
            }
            CHECK(s * h == doctest::Approx(n == m ? 1.0 : 0.0).epsilon(1e-7));
        }
    }
}
