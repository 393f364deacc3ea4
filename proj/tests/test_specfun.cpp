#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "relosc/errors.hpp"
#include "relosc/specfun.hpp"

using relosc::Complex;
using relosc::kI;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// Random z in |Re z| <= 20, |Im z| <= 20, at least 0.05 from any pole.
std::vector<Complex> strip_sample(unsigned count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    std::vector<Complex> out;
    while (out.size() < count) {
        const Complex z(u(rng), u(rng));
        const bool near_pole = z.real() < 0.5 && std::abs(z.imag()) < 0.05 &&
                               std::abs(z.real() - std::round(z.real())) < 0.05;
        if (!near_pole) {
            out.push_back(z);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("ln_gamma at real points") {
    CHECK(std::exp(relosc::ln_gamma(5.0)).real() == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(relosc::ln_gamma(0.5).real() == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
    for (double x : {0.1, 0.7, 1.5, 3.25, 11.0, 40.5, 170.0}) {
        CHECK(relosc::ln_gamma(x).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
        CHECK(relosc::ln_gamma(x).imag() == 0.0);
    }
}

TEST_CASE("ln_gamma against high-precision loggamma values") {
    struct Case {
        Complex z;
        Complex expected;
    };
    // 40-digit reference values of the standard loggamma branch.
    const Case cases[] = {
        {{3.0, 4.0}, {-1.7566267846037841105, 4.7426644380346579282}},
        {{-2.5, 0.5}, {-0.93508562129827747868, -8.8709628852474591986}},
        {{0.1, -7.0}, {-10.854877044420902517, -5.9875701533014403073}},
        {{30.0, 25.0}, {61.665928908812834392, 87.115284181235840244}},
        {{-7.3, -0.2}, {-8.0379725729189845863, 24.337286753302470801}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.z);
        CHECK(std::abs(relosc::ln_gamma(c.z) - c.expected) < 1e-12 * std::max(1.0, std::abs(c.expected)));
    }
}

TEST_CASE("|Gamma(1/2 + i)|^2 equals pi / cosh(pi)") {
    const Complex lg = relosc::ln_gamma(Complex(0.5, 1.0));
    CHECK(std::exp(2.0 * lg.real()) == doctest::Approx(std::numbers::pi / std::cosh(std::numbers::pi)).epsilon(1e-13));
    CHECK(std::exp(2.0 * lg.real()) == doctest::Approx(0.27101495139941834789).epsilon(1e-13));
}

TEST_CASE("ln_gamma refuses poles") {
    CHECK_THROWS_AS(relosc::ln_gamma(0.0), relosc::PoleError);
    CHECK_THROWS_AS(relosc::ln_gamma(-3.0), relosc::PoleError);
    CHECK_NOTHROW(relosc::ln_gamma(Complex(-3.0, 1e-9)));
}

TEST_CASE("gamma recurrence on the strip") {
    for (const Complex z : strip_sample(1000, 1)) {
        CAPTURE(z);
        // exp(ln G(z+1) - ln G(z)) = z
        const Complex ratio = std::exp(relosc::ln_gamma(z + 1.0) - relosc::ln_gamma(z));
        CHECK(rel(ratio, z) < 1e-12);
    }
}

TEST_CASE("reflection formula on the strip") {
    for (const Complex z : strip_sample(1000, 2)) {
        CAPTURE(z);
        const Complex prod = std::exp(relosc::ln_gamma(z) + relosc::ln_gamma(1.0 - z)) *
                             std::sin(std::numbers::pi * z) / std::numbers::pi;
        CHECK(std::abs(prod - 1.0) < 1e-11);
    }
}

TEST_CASE("conjugation symmetry") {
    for (const Complex z : strip_sample(200, 3)) {
        CAPTURE(z);
        const Complex a = relosc::ln_gamma(std::conj(z));
        const Complex b = std::conj(relosc::ln_gamma(z));
        CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("ln_gamma is continuous along vertical lines") {
    for (double x : {-3.5, -0.5, 0.5, 2.0}) {
        Complex prev = relosc::ln_gamma(Complex(x, 0.01));
        for (double y = 0.02; y < 20.0; y += 0.01) {
            const Complex cur = relosc::ln_gamma(Complex(x, y));
            CHECK(std::abs(cur - prev) < 0.1);
            prev = cur;
        }
    }
}

TEST_CASE("ln_gamma_ratio for large arguments") {
    // Gamma(z + s) / Gamma(z) ~ z^s for |z| >> |s|.
    const Complex z(1e12, 3e6);
    const Complex s(0.5, 2.0);
    const Complex r = relosc::ln_gamma_ratio(z, s);
    const Complex approx = s * std::log(z) + s * (s - 1.0) / (2.0 * z);
    CHECK(std::abs(r - approx) < 1e-12);
    // Exact against ordinary ln_gamma at moderate size.
    const Complex w(25.0, 7.0);
    CHECK(std::abs(relosc::ln_gamma_ratio(w, 3.5) - (relosc::ln_gamma(w + 3.5) - relosc::ln_gamma(w))) < 1e-12);
}

TEST_CASE("pochhammer agrees with gamma_ratio") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int i = 0; i < 300; ++i) {
        const Complex a(u(rng), u(rng));
        for (unsigned n = 0; n <= 8; ++n) {
            CAPTURE(a);
            CAPTURE(n);
            CHECK(rel(relosc::gamma_ratio(a, n), relosc::pochhammer(a, n)) < 1e-12);
        }
    }
    CHECK(relosc::pochhammer(Complex(-3.0), 5) == Complex(0.0));
    CHECK(relosc::pochhammer(Complex(2.0), 3) == Complex(24.0));
}

TEST_CASE("binomial") {
    CHECK(relosc::binomial(4, 2) == 6);
    CHECK(relosc::binomial(4, -1) == 0);
    CHECK(relosc::binomial(4, 5) == 0);
    CHECK(relosc::binomial(7, 0) == 1);
    CHECK(relosc::binomial(64, 32) == 1832624140942590534ULL);
    CHECK_THROWS_AS(relosc::binomial(65, 3), relosc::ParameterError);
}

TEST_CASE("principal branch") {
    CHECK(relosc::principal_log(Complex(-1.0, 0.0)).imag() == doctest::Approx(std::numbers::pi));
    CHECK(relosc::principal_log(Complex(-1.0, -0.0)).imag() == doctest::Approx(std::numbers::pi));
    CHECK(std::abs(relosc::principal_pow(kI, 2.0) + 1.0) < 1e-15);
    const Complex u(1e-10, 1e-10);
    CHECK(std::abs(relosc::log1p(u) - (u - u * u / 2.0)) < 1e-28);
}
