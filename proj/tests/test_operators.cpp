#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "relosc/errors.hpp"
#include "relosc/operators.hpp"
#include "relosc/orthopoly.hpp"

using relosc::Complex;
using relosc::kI;
using relosc::Ladder;
using relosc::LadderOrdering;
using relosc::OscillatorParams;

namespace {

std::vector<Complex> sample(unsigned count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(0.3, 10.0);
    std::uniform_real_distribution<double> uy(-0.4, 0.4);
    std::vector<Complex> out;
    for (unsigned i = 0; i < count; ++i) {
        out.emplace_back(ux(rng), uy(rng));
    }
    return out;
}

const OscillatorParams kParams[] = {
    OscillatorParams::natural(0.5, 3.0),
    OscillatorParams::natural(3.0, 1.0),
    OscillatorParams(1.4, 0.7, 0.2, 2.5, 0.9),
};

}  // namespace

TEST_CASE("lowering operator annihilates the ground state") {
    for (const auto& p : kParams) {
        const auto sol = relosc::compute_alpha_nu(p);
        const auto psi0 = relosc::eigenfunction(0, p);
        for (const Complex rho : sample(30, 31)) {
            const Complex scale = std::abs(psi0(rho + 0.5 * kI)) + std::abs(psi0(rho - 0.5 * kI));
            CHECK(std::abs(relosc::apply_ladder(Ladder::Lowering, psi0, rho, sol, p)) < 1e-10 * std::abs(scale));
        }
    }
}

TEST_CASE("only the adopted ordering annihilates the ground state") {
    const auto& p = kParams[0];
    const auto sol = relosc::compute_alpha_nu(p);
    const auto psi0 = relosc::eigenfunction(0, p);
    double worst = 0.0;
    for (const Complex rho : sample(30, 32)) {
        const double scale = std::abs(psi0(rho + 0.5 * kI));
        const Complex other =
            relosc::apply_ladder(Ladder::Lowering, psi0, rho, sol, p, LadderOrdering::MultiplyThenShift);
        worst = std::max(worst, std::abs(other) / scale);
    }
    CHECK(worst > 1e-3);
}

TEST_CASE("factorized Hamiltonian reproduces the spectrum") {
    // H / (m c^2) = a+ a- + omega0 (alpha + nu), a+ a- psi_n = 2 n omega0 psi_n
    for (const auto& p : kParams) {
        const auto sol = relosc::compute_alpha_nu(p);
        for (unsigned n = 0; n <= 4; ++n) {
            const auto psi = relosc::eigenfunction(n, p);
            const auto lowered = relosc::ladder_action(Ladder::Lowering, psi, sol, p);
            for (const Complex rho : sample(10, 33 + n)) {
                const Complex number = relosc::apply_ladder(Ladder::Raising, lowered, rho, sol, p);
                const Complex value = psi(rho);
                const double w0 = p.omega0();
                CHECK(std::abs(number - 2.0 * n * w0 * value) <
                      1e-8 * std::max(1.0, 2.0 * n) * w0 * std::abs(value));
                const Complex h = relosc::apply_hamiltonian(psi, rho, p);
                const Complex fact = number + w0 * sol.alpha_plus_nu() * value;
                CHECK(std::abs(h - fact) < 1e-8 * std::abs(h));
            }
        }
    }
}

TEST_CASE("singular points") {
    const auto& p = kParams[0];
    const auto sol = relosc::compute_alpha_nu(p);
    const auto psi = relosc::eigenfunction(1, p);
    CHECK_THROWS_AS(relosc::apply_hamiltonian(psi, 0.0, p), relosc::SingularPointError);
    CHECK_THROWS_AS(relosc::apply_hamiltonian(psi, -kI, p), relosc::SingularPointError);
    CHECK_THROWS_AS(relosc::apply_ladder(Ladder::Raising, psi, 0.0, sol, p), relosc::SingularPointError);
    CHECK_THROWS_AS(relosc::apply_ladder(Ladder::Lowering, psi, -0.5 * kI, sol, p), relosc::SingularPointError);
}

TEST_CASE("series coefficients reproduce the polynomial part") {
    for (const auto& p : kParams) {
        const auto sol = relosc::compute_alpha_nu(p);
        for (unsigned n = 0; n <= 6; ++n) {
            const auto e = relosc::series_coefficients(n, sol);
            REQUIRE(e.size() == n + 1);
            CHECK(e.back() == Complex(1.0));
            // Leading coefficient of S_n in x^2 is (-1)^n, and (i rho)^2n = (-1)^n rho^2n.
            const Complex x0(1.7, 0.2);
            const Complex ratio0 = relosc::evaluate_series(e, x0) /
                                   relosc::cdh_recurrence(n, x0 * x0, {sol.alpha, sol.nu, 0.5});
            const Complex x1(4.3, -0.1);
            const Complex ratio1 = relosc::evaluate_series(e, x1) /
                                   relosc::cdh_recurrence(n, x1 * x1, {sol.alpha, sol.nu, 0.5});
            CHECK(std::abs(ratio0 - ratio1) < 1e-10 * std::abs(ratio0));
            CHECK(std::abs(ratio0 - 1.0) < 1e-10);
        }
    }
    CHECK_THROWS_AS(relosc::series_coefficients(33, relosc::compute_alpha_nu(kParams[0])), relosc::ParameterError);
    CHECK_THROWS_AS(relosc::series_coefficients(1, relosc::compute_alpha_nu(OscillatorParams::natural(-2.0, 1.0))),
                    relosc::CollapseError);
}

TEST_CASE("plane wave kinematics") {
    const OscillatorParams p(2.0, 1.0, 0.0, 3.0, 0.5);
    const auto s = relosc::plane_wave_state(4.0, p);
    CHECK(s.p0 == doctest::Approx(std::sqrt(16.0 + 36.0)));
    CHECK(s.energy == doctest::Approx(3.0 * s.p0));
    CHECK(std::cosh(s.rapidity) * p.m() * p.c() == doctest::Approx(s.p0));
    CHECK(std::sinh(s.rapidity) * p.m() * p.c() == doctest::Approx(s.p));
    CHECK(std::abs(relosc::plane_wave(4.0, 1.3, p)) == doctest::Approx(1.0));
}

TEST_CASE("free Hamiltonian and momentum on plane waves") {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> up(-5.0, 5.0);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    for (const auto& p : kParams) {
        for (int i = 0; i < 50; ++i) {
            const double mom = up(rng);
            const Complex x(ux(rng), 0.0);
            const auto xi = [&](Complex y) { return relosc::plane_wave(mom, y, p); };
            const auto s = relosc::plane_wave_state(mom, p);
            const Complex v = xi(x);
            CHECK(std::abs(relosc::apply_free_hamiltonian(xi, x, p) - s.energy * v) < 1e-12 * s.energy);
            CHECK(std::abs(relosc::apply_momentum(xi, x, p) - mom * v) < 1e-12 * std::max(1.0, s.p0));
        }
    }
}
