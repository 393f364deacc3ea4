#include "relosc/orthopoly.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "relosc/errors.hpp"

namespace relosc {

namespace {

void require_degree(unsigned n, const char* who) {
    if (n > kMaxPolynomialDegree) {
        throw ParameterError(std::string(who) + ": degree " + std::to_string(n) +
                             " exceeds " + std::to_string(kMaxPolynomialDegree));
    }
}

using WideComplex = std::complex<long double>;

// Neumaier summation in extended precision, applied to each component.
class CompensatedSum {
public:
    void add(WideComplex v) {
        add_component(sum_re_, carry_re_, v.real());
        add_component(sum_im_, carry_im_, v.imag());
    }
    WideComplex value() const { return {sum_re_ + carry_re_, sum_im_ + carry_im_}; }

private:
    static void add_component(long double& sum, long double& carry, long double v) {
        const long double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    long double sum_re_ = 0.0L, carry_re_ = 0.0L;
    long double sum_im_ = 0.0L, carry_im_ = 0.0L;
};

void require_nonvanishing_pochhammers(unsigned n, const CdhParams& p, const char* who) {
    for (unsigned j = 0; j < n; ++j) {
        const double k = static_cast<double>(j);
        if (p.a + p.b + k == Complex(0.0) || p.a + p.c + k == Complex(0.0)) {
            throw ParameterError(std::string(who) +
                                 ": (a+b)_k or (a+c)_k vanishes; 3F2 undefined");
        }
    }
}

}  // namespace

Complex cdh_series(unsigned n, Complex x_sq, const CdhParams& p) {
    require_degree(n, "cdh_series");
    require_nonvanishing_pochhammers(n, p, "cdh_series");
    // term_k = (-n)_k (a+ix)_k (a-ix)_k / ((a+b)_k (a+c)_k k!)
    // The terms alternate and can exceed the sum by many orders of magnitude,
    // so both the terms and the sum are carried in long double.
    const WideComplex a(p.a), b(p.b), c(p.c), xx(x_sq);
    CompensatedSum sum;
    WideComplex term = 1.0L;
    sum.add(term);
    for (unsigned k = 0; k < n; ++k) {
        const auto kd = static_cast<long double>(k);
        const WideComplex shifted = a + kd;
        term *= (kd - static_cast<long double>(n)) * (shifted * shifted + xx) /
                ((a + b + kd) * (a + c + kd) * (kd + 1.0L));
        sum.add(term);
    }
    WideComplex prefactor = 1.0L;
    for (unsigned k = 0; k < n; ++k) {
        const auto kd = static_cast<long double>(k);
        prefactor *= (a + b + kd) * (a + c + kd);
    }
    const WideComplex v = prefactor * sum.value();
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::vector<Complex> cdh_recurrence_sequence(unsigned n, Complex x_sq, const CdhParams& p) {
    require_degree(n, "cdh_recurrence");
    require_nonvanishing_pochhammers(n, p, "cdh_recurrence");
    std::vector<Complex> out(n + 1);
    // Monic-normalized values S~_k and the running scale (a+b)_k (a+c)_k.
    Complex prev = 0.0;
    Complex cur = 1.0;
    Complex scale = 1.0;
    out[0] = 1.0;
    const Complex a_sq = p.a * p.a;
    for (unsigned k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const Complex big_a = (kd + p.a + p.b) * (kd + p.a + p.c);
        const Complex big_c = kd * (kd + p.b + p.c - 1.0);
        const Complex next = ((big_a + big_c - a_sq - x_sq) * cur - big_c * prev) / big_a;
        prev = cur;
        cur = next;
        scale *= big_a;
        out[k + 1] = scale * cur;
    }
    return out;
}

Complex cdh_recurrence(unsigned n, Complex x_sq, const CdhParams& p) {
    return cdh_recurrence_sequence(n, x_sq, p).back();
}

Complex meixner_pollaczek(unsigned n, Complex x, Complex lambda, double phi) {
    require_degree(n, "meixner_pollaczek");
    if (!(phi > 0.0 && phi < std::numbers::pi)) {
        throw ParameterError("meixner_pollaczek: phi must lie in (0, pi)");
    }
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    Complex prev = 0.0;
    Complex cur = 1.0;
    for (unsigned k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const Complex next =
            (2.0 * (x * s + (kd + lambda) * c) * cur - (kd + 2.0 * lambda - 1.0) * prev) /
            (kd + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double laguerre(unsigned n, double d, double y) {
    require_degree(n, "laguerre");
    double prev = 0.0;
    double cur = 1.0;
    for (unsigned k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const double next = ((2.0 * kd + 1.0 + d - y) * cur - (kd + d) * prev) / (kd + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace relosc
