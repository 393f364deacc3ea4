#include "relosc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "relosc/errors.hpp"
#include "relosc/operators.hpp"
#include "relosc/orthopoly.hpp"

namespace relosc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Tolerance of checks that only assert monotone convergence.
constexpr double kMonotoneOnly = std::numeric_limits<double>::max();

std::string format_sequence(const std::vector<double>& v) {
    std::ostringstream os;
    os.precision(3);
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? ", " : "") << v[i];
    }
    os << ']';
    return os.str();
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] < v[i - 1])) {
            return false;
        }
    }
    return true;
}

// Strictly decreasing, or exactly zero throughout.
bool converging(const std::vector<double>& v) {
    return strictly_decreasing(v) ||
           std::all_of(v.begin(), v.end(), [](double e) { return e == 0.0; });
}

std::string g_note(const char* label, double v) {
    std::ostringstream os;
    os.precision(6);
    os << label << '=' << v;
    return os.str();
}

// log |psi_n(rho)|^2 from the stored log factors; finite where the value
// itself would underflow.
double log_abs_sq(unsigned n, double rho, const OscillatorParams& params,
                  const SpectralSolution& sol) {
    const auto w = wavefunction(n, rho, params, sol);
    const auto& f = w.factors;
    return 2.0 * (std::log(f.c_n) + f.log_generalized_degree.real() + f.log_m_factor.real() +
                  std::log(std::abs(f.polynomial)));
}

double envelope_power(unsigned n, const SpectralSolution& sol) {
    return 2.0 * sol.alpha_plus_nu().real() - 1.0 + 4.0 * n;
}

std::vector<double> linspace(double lo, double hi, unsigned count) {
    std::vector<double> out(count);
    for (unsigned i = 0; i < count; ++i) {
        out[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
    }
    return out;
}

QuadratureGrid build_grid(double radius, const GridOptions& options) {
    QuadratureGrid grid;
    grid.nodes_per_panel = options.near_nodes;
    grid.far_nodes_per_panel = options.far_nodes;
    grid.truncation_radius = radius;
    const GaussLegendreRule near_rule = gauss_legendre(options.near_nodes);
    const GaussLegendreRule far_rule = gauss_legendre(options.far_nodes);
    for (double lo = 0.0; lo < radius - 1e-12; lo += options.panel_width) {
        const double hi = std::min(lo + options.panel_width, radius);
        const bool near = lo < options.near_limit;
        const GaussLegendreRule& rule = near ? near_rule : far_rule;
        grid.panels.push_back({lo, hi, near ? options.near_nodes : options.far_nodes});
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            grid.abscissae.push_back(mid + half * rule.nodes[k]);
            grid.weights.push_back(half * rule.weights[k]);
        }
    }
    return grid;
}

VerificationReport collapse_report(const std::string& name, const OscillatorParams& params) {
    return make_report(name, params, kNaN, 0.0,
                       "parameters are in the collapse regime; g_crit = " +
                           std::to_string(critical_coupling(params)));
}

}  // namespace

GaussLegendreRule gauss_legendre(unsigned n) {
    if (n == 0) {
        throw ParameterError("gauss_legendre: need at least one node");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (unsigned i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (unsigned k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

double tail_envelope_bound(unsigned n, const OscillatorParams& params, double radius) {
    const SpectralSolution sol = compute_alpha_nu(params);
    if (sol.regime == Regime::Collapse) {
        throw CollapseError("tail_envelope_bound: collapse regime", critical_coupling(params));
    }
    const double p = envelope_power(n, sol);
    if (!(p / radius < std::numbers::pi)) {
        throw GridTooSmallError("tail_envelope_bound: envelope not yet decaying at R");
    }
    // |psi_n|^2 ~ C rho^p e^{-pi rho}; C is estimated just past R where the
    // asymptotic form already holds, then
    //   int_R^inf rho^p e^{-pi rho} <= R^p e^{-pi R} / (pi - p/R).
    double log_c = -kInf;
    for (int j = 0; j <= 8; ++j) {
        const double rho = radius + 0.25 * j;
        const double lc = log_abs_sq(n, rho, params, sol) - p * std::log(rho) + std::numbers::pi * rho;
        if (std::isfinite(lc)) {
            log_c = std::max(log_c, lc);
        }
    }
    if (!std::isfinite(log_c)) {
        return 0.0;
    }
    const double log_bound = std::log(2.0) + log_c + p * std::log(radius) -
                             std::numbers::pi * radius -
                             std::log(std::numbers::pi - p / radius);
    return std::exp(log_bound);
}

QuadratureGrid make_quadrature_grid(const OscillatorParams& params, unsigned n_states,
                                    const GridOptions& options) {
    const SpectralSolution sol = compute_alpha_nu(params);
    if (sol.regime == Regime::Collapse) {
        throw CollapseError("make_quadrature_grid: collapse regime", critical_coupling(params));
    }
    if (n_states == 0) {
        throw ParameterError("make_quadrature_grid: need at least one state");
    }
    if (options.near_nodes == 0 || options.far_nodes == 0 || !(options.panel_width > 0.0)) {
        throw ParameterError("make_quadrature_grid: invalid grid options");
    }
    double radius = options.truncation_radius.value_or(std::max(40.0, 10.0 * sol.nu.real()));
    if (!(radius > 0.0)) {
        throw ParameterError("make_quadrature_grid: truncation radius must be positive");
    }
    if (!options.truncation_radius) {
        const double p = envelope_power(n_states - 1, sol);
        radius = std::max(radius, 2.0 * p / std::numbers::pi);
        radius = options.panel_width * std::ceil(radius / options.panel_width);
    }
    QuadratureGrid grid = build_grid(radius, options);
    for (unsigned n = 0; n < n_states; ++n) {
        grid.tail_bound = std::max(grid.tail_bound, tail_envelope_bound(n, params, radius));
    }
    return grid;
}

ComplexMatrix overlap_matrix(unsigned n_states, const OscillatorParams& params,
                             const QuadratureGrid& grid, double tolerance, double cn_scale) {
    const SpectralSolution sol = compute_alpha_nu(params);
    if (sol.regime == Regime::Collapse) {
        throw CollapseError("overlap_matrix: collapse regime", critical_coupling(params));
    }
    if (grid.tail_bound > tolerance / 10.0) {
        throw GridTooSmallError("overlap_matrix: tail bound " + std::to_string(grid.tail_bound) +
                                " exceeds tolerance / 10");
    }
    ComplexMatrix g{n_states, std::vector<Complex>(std::size_t{n_states} * n_states)};
    std::vector<Complex> values(n_states);
    for (std::size_t k = 0; k < grid.abscissae.size(); ++k) {
        const double rho = grid.abscissae[k];
        for (unsigned n = 0; n < n_states; ++n) {
            values[n] = cn_scale * wavefunction(n, rho, params, sol).value;
        }
        const double w = grid.weights[k];
        for (unsigned i = 0; i < n_states; ++i) {
            for (unsigned j = 0; j < n_states; ++j) {
                g(i, j) += w * values[i] * std::conj(values[j]);
            }
        }
    }
    return g;
}

double identity_deviation(const ComplexMatrix& g) {
    double worst = 0.0;
    for (unsigned i = 0; i < g.size; ++i) {
        for (unsigned j = 0; j < g.size; ++j) {
            worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

VerificationReport make_report(std::string name, const OscillatorParams& params, double residual,
                               double tolerance, std::string notes) {
    VerificationReport r;
    r.check_name = std::move(name);
    r.params = params;
    r.residual = residual;
    r.tolerance = tolerance;
    r.passed = residual <= tolerance;
    r.notes = std::move(notes);
    return r;
}

std::vector<Complex> strip_points(unsigned count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(0.2, 15.0);
    std::uniform_real_distribution<double> im(-0.5, 0.5);
    std::vector<Complex> out;
    out.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
        const double x = re(rng);
        out.emplace_back(x, im(rng));
    }
    return out;
}

VerificationReport check_orthonormality(const OscillatorParams& params, unsigned n_states,
                                        double tolerance, double cn_scale) {
    const std::string name = "orthonormality";
    if (classify_regime(params) == Regime::Collapse) {
        return collapse_report(name, params);
    }
    try {
        const QuadratureGrid grid = make_quadrature_grid(params, n_states);
        const ComplexMatrix g = overlap_matrix(n_states, params, grid, tolerance, cn_scale);
        std::ostringstream notes;
        notes << "N=" << n_states << " R=" << grid.truncation_radius
              << " nodes=" << grid.abscissae.size() << " tail_bound=" << grid.tail_bound;
        if (cn_scale != 1.0) {
            notes << " c_n scaled by " << cn_scale;
        }
        return make_report(name, params, identity_deviation(g), tolerance, notes.str());
    } catch (const GridTooSmallError& e) {
        return make_report(name, params, kNaN, tolerance, e.what());
    }
}

VerificationReport check_quadrature_stability(const OscillatorParams& params, unsigned n_states,
                                              double tolerance) {
    const std::string name = "quadrature-stability";
    if (classify_regime(params) == Regime::Collapse) {
        return collapse_report(name, params);
    }
    GridOptions base;
    const QuadratureGrid coarse = make_quadrature_grid(params, n_states, base);
    GridOptions doubled = base;
    doubled.near_nodes *= 2;
    doubled.far_nodes *= 2;
    doubled.truncation_radius = coarse.truncation_radius;
    QuadratureGrid fine = make_quadrature_grid(params, n_states, doubled);
    const ComplexMatrix a = overlap_matrix(n_states, params, coarse, kInf);
    const ComplexMatrix b = overlap_matrix(n_states, params, fine, kInf);
    double worst = 0.0;
    for (std::size_t k = 0; k < a.data.size(); ++k) {
        worst = std::max(worst, std::abs(a.data[k] - b.data[k]));
    }
    return make_report(name, params, worst, tolerance,
                       "max entry change when doubling nodes per panel, N=" +
                           std::to_string(n_states));
}

VerificationReport check_tail_bound(const OscillatorParams& params, unsigned n_states) {
    const std::string name = "tail-bound";
    const SpectralSolution sol = compute_alpha_nu(params);
    if (sol.regime == Regime::Collapse) {
        return collapse_report(name, params);
    }
    const QuadratureGrid grid = make_quadrature_grid(params, n_states);
    const double radius = grid.truncation_radius;
    GridOptions opts;
    opts.near_limit = 0.0;
    opts.truncation_radius = radius;
    const QuadratureGrid outer = build_grid(radius, opts);
    double worst = 0.0;
    for (unsigned n = 0; n < n_states; ++n) {
        const double bound = tail_envelope_bound(n, params, radius);
        double integral = 0.0;
        for (std::size_t k = 0; k < outer.abscissae.size(); ++k) {
            integral += outer.weights[k] *
                        std::exp(log_abs_sq(n, radius + outer.abscissae[k], params, sol));
        }
        if (integral > 0.0) {
            worst = std::max(worst, bound > 0.0 ? integral / bound : kInf);
        }
    }
    return make_report(name, params, worst, 1.0,
                       "max over n of (integral over [R, 2R]) / tail bound; R=" +
                           std::to_string(radius));
}

VerificationReport check_eigen_residual(const OscillatorParams& params, unsigned n_max,
                                        const std::vector<Complex>& points, double tolerance) {
    const std::string name = "eigen-residual";
    const SpectralSolution sol = compute_alpha_nu(params);
    if (sol.regime == Regime::Collapse) {
        return collapse_report(name, params);
    }
    double worst = 0.0;
    unsigned worst_n = 0;
    for (unsigned n = 0; n <= n_max; ++n) {
        const AnalyticFunction f = [&, n](Complex r) { return wavefunction(n, r, params, sol).value; };
        const Complex e = params.omega0() * (2.0 * n + sol.alpha_plus_nu());
        for (const Complex rho : points) {
            const Complex target = e * f(rho);
            const double r =
                std::abs(apply_hamiltonian(f, rho, params) - target) / std::max(std::abs(target), 1e-12);
            if (r > worst) {
                worst = r;
                worst_n = n;
            }
        }
    }
    return make_report(name, params, worst, tolerance,
                       "regime=" + std::string(to_string(sol.regime)) + " n<=" +
                           std::to_string(n_max) + " worst n=" + std::to_string(worst_n));
}

namespace {

// max |a- psi_0| relative to the size of the two terms that cancel in it.
double annihilation_residual(const OscillatorParams& params, const SpectralSolution& sol,
                             const std::vector<Complex>& points, LadderOrdering ordering) {
    const AnalyticFunction f = [&](Complex r) { return wavefunction(0, r, params, sol).value; };
    const Complex half = 0.5 * kI;
    double worst = 0.0;
    double scale = 0.0;
    for (const Complex rho : points) {
        worst = std::max(worst, std::abs(apply_ladder(Ladder::Lowering, f, rho, sol, params, ordering)));
        const Complex where = ordering == LadderOrdering::ShiftThenMultiply ? rho + half : rho;
        const Complex factor = (sol.nu + kI * where) * (1.0 + sol.alpha / (kI * where));
        scale = std::max(scale, (std::abs(f(rho - half)) +
                                 params.omega0() * std::abs(factor * f(rho + half))) /
                                    std::numbers::sqrt2);
    }
    return worst / scale;
}

double factorization_residual(const AnalyticFunction& f, const OscillatorParams& params,
                              const SpectralSolution& sol, const std::vector<Complex>& points,
                              LadderOrdering ordering) {
    const AnalyticFunction lowered = ladder_action(Ladder::Lowering, f, sol, params, ordering);
    double worst = 0.0;
    for (const Complex rho : points) {
        const Complex lhs = apply_ladder(Ladder::Raising, lowered, rho, sol, params, ordering) +
                            params.omega0() * sol.alpha_plus_nu() * f(rho);
        const Complex rhs = apply_hamiltonian(f, rho, params);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-12));
    }
    return worst;
}

}  // namespace

VerificationReport check_ground_annihilation(const OscillatorParams& params,
                                             const std::vector<Complex>& points,
                                             double tolerance) {
    const std::string name = "ladder-annihilation";
    const SpectralSolution sol = compute_alpha_nu(params);
    if (sol.regime == Regime::Collapse) {
        return collapse_report(name, params);
    }
    return make_report(name, params,
                       annihilation_residual(params, sol, points, LadderOrdering::ShiftThenMultiply),
                       tolerance, "|a- psi_0| relative to its cancelling terms");
}

VerificationReport check_number_operator(const OscillatorParams& params, unsigned n_max,
                                         const std::vector<Complex>& points, double tolerance) {
    const std::string name = "number-operator";
    const SpectralSolution sol = compute_alpha_nu(params);
    if (sol.regime == Regime::Collapse) {
        return collapse_report(name, params);
    }
    const double w0 = params.omega0();
    double pointwise = 0.0;
    std::vector<double> eig;
    for (unsigned n = 0; n <= n_max; ++n) {
        const AnalyticFunction f = [&, n](Complex r) { return wavefunction(n, r, params, sol).value; };
        const AnalyticFunction lowered = ladder_action(Ladder::Lowering, f, sol, params);
        const double lam = 2.0 * n * w0;
        Complex num = 0.0;
        double den = 0.0;
        for (const Complex rho : points) {
            const Complex v = f(rho);
            const Complex nv = apply_ladder(Ladder::Raising, lowered, rho, sol, params);
            const double scale = std::max(w0 * std::max(1.0, 2.0 * n) * std::abs(v), 1e-12);
            pointwise = std::max(pointwise, std::abs(nv - lam * v) / scale);
            num += std::conj(v) * nv;
            den += std::norm(v);
        }
        eig.push_back((num / den).real());
    }
    // Least-squares line through the eigenvalue estimates.
    const double count = static_cast<double>(eig.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t n = 0; n < eig.size(); ++n) {
        sx += static_cast<double>(n);
        sy += eig[n];
        sxx += static_cast<double>(n * n);
        sxy += static_cast<double>(n) * eig[n];
    }
    double fit = 0.0;
    if (eig.size() >= 2) {
        const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
        const double intercept = (sy - slope * sx) / count;
        fit = std::max(std::abs(slope - 2.0 * w0) / (2.0 * w0), std::abs(intercept) / w0);
    }
    std::ostringstream notes;
    notes << "pointwise=" << pointwise << " linear fit deviation=" << fit;
    return make_report(name, params, std::max(pointwise, fit), tolerance, notes.str());
}

VerificationReport check_factorization(const OscillatorParams& params, unsigned n_max,
                                       const std::vector<Complex>& points, double tolerance) {
    const std::string name = "factorization";
    const SpectralSolution sol = compute_alpha_nu(params);
    if (sol.regime == Regime::Collapse) {
        return collapse_report(name, params);
    }
    double worst = 0.0;
    for (unsigned n = 0; n <= n_max; ++n) {
        const AnalyticFunction f = [&, n](Complex r) { return wavefunction(n, r, params, sol).value; };
        worst = std::max(worst, factorization_residual(f, params, sol, points,
                                                       LadderOrdering::ShiftThenMultiply));
    }
    // The identity is an operator identity, so it must hold off the spectrum too.
    const AnalyticFunction generic = [](Complex r) {
        return std::exp(0.5 * kI * r) / (1.0 + r * r / 50.0);
    };
    worst = std::max(worst, factorization_residual(generic, params, sol, points,
                                                   LadderOrdering::ShiftThenMultiply));
    return make_report(name, params, worst, tolerance,
                       "a+ a- + omega0 (alpha + nu) against H on psi_n, n<=" +
                           std::to_string(n_max) + ", and a generic test function");
}

VerificationReport check_ladder_ordering(const OscillatorParams& params,
                                         const std::vector<Complex>& points, double tolerance) {
    const std::string name = "ladder-ordering";
    const SpectralSolution sol = compute_alpha_nu(params);
    if (sol.regime == Regime::Collapse) {
        return collapse_report(name, params);
    }
    const double adopted =
        annihilation_residual(params, sol, points, LadderOrdering::ShiftThenMultiply);
    const double other =
        annihilation_residual(params, sol, points, LadderOrdering::MultiplyThenShift);
    const AnalyticFunction psi1 = [&](Complex r) { return wavefunction(1, r, params, sol).value; };
    const double fact_adopted =
        factorization_residual(psi1, params, sol, points, LadderOrdering::ShiftThenMultiply);
    const double fact_other =
        factorization_residual(psi1, params, sol, points, LadderOrdering::MultiplyThenShift);

    // Half-line adjoint mismatch <psi_0, a- psi_1> - <a+ psi_0, psi_1>; the
    // contour shift picks up a boundary term at rho = 0, so this is reported
    // but not asserted.
    auto adjoint_gap = [&](LadderOrdering ord) {
        const AnalyticFunction psi0 = [&](Complex r) { return wavefunction(0, r, params, sol).value; };
        const QuadratureGrid grid = make_quadrature_grid(params, 2);
        Complex left = 0.0, right = 0.0;
        for (std::size_t k = 0; k < grid.abscissae.size(); ++k) {
            const double rho = grid.abscissae[k];
            const double w = grid.weights[k];
            left += w * std::conj(psi0(rho)) * apply_ladder(Ladder::Lowering, psi1, rho, sol, params, ord);
            right += w * std::conj(apply_ladder(Ladder::Raising, psi0, rho, sol, params, ord)) * psi1(rho);
        }
        return std::abs(left - right) / std::max(std::abs(left), 1e-300);
    };

    std::ostringstream notes;
    notes << "adopted: factor of a- at rho+i/2, of a+ at rho; a- psi_0=" << adopted
          << ", factorization=" << fact_adopted << ", half-line adjoint gap=" << adjoint_gap(LadderOrdering::ShiftThenMultiply)
          << "; swapped: a- psi_0=" << other << ", factorization=" << fact_other
          << ", half-line adjoint gap=" << adjoint_gap(LadderOrdering::MultiplyThenShift);
    // Only a decisive split resolves the ordering.
    const double residual = other > 1e-3 ? adopted : kInf;
    return make_report(name, params, residual, tolerance, notes.str());
}

namespace {

CdhParams random_cdh(std::mt19937_64& rng, bool conjugate_pair) {
    std::uniform_real_distribution<double> pos(0.2, 3.0);
    if (conjugate_pair) {
        std::uniform_real_distribution<double> im(0.1, 2.0);
        const Complex a(std::uniform_real_distribution<double>(0.5, 3.0)(rng), im(rng));
        return {a, std::conj(a), 0.5};
    }
    const double a = pos(rng);
    return {a, pos(rng), 0.5};
}

double rel_diff(Complex a, Complex b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

VerificationReport check_cdh_dual_path(unsigned n_max, unsigned samples, double tolerance,
                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xs(0.0, 3.0);
    double worst = 0.0;
    for (unsigned s = 0; s < samples; ++s) {
        const CdhParams p = random_cdh(rng, s % 2 == 1);
        const double x = xs(rng);
        const auto seq = cdh_recurrence_sequence(n_max, x * x, p);
        for (unsigned n = 0; n <= n_max; ++n) {
            worst = std::max(worst, rel_diff(cdh_series(n, x * x, p), seq[n]));
        }
    }
    return make_report("cdh-dual-path", OscillatorParams{}, worst, tolerance,
                       std::to_string(samples) + " samples (half with conjugate a, b), n<=" +
                           std::to_string(n_max));
}

VerificationReport check_identity_odd(unsigned n_max, unsigned samples, double tolerance,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xs(0.05, 3.0);
    std::uniform_real_distribution<double> bs(0.2, 3.0);
    double worst = 0.0;
    for (unsigned s = 0; s < samples; ++s) {
        const double x = xs(rng);
        const double b = bs(rng);
        for (unsigned n = 0; n <= n_max; ++n) {
            const double k = 2.0 * n + 1.0;
            const double coeff = (n % 2 ? -1.0 : 1.0) * std::exp(k * std::log(2.0) - std::lgamma(k + 1.0));
            const Complex lhs = meixner_pollaczek(2 * n + 1, x, b, std::numbers::pi / 2.0);
            const Complex rhs = coeff * x * cdh_recurrence(n, x * x, {1.0, b, 0.5});
            worst = std::max(worst, rel_diff(lhs, rhs));
        }
    }
    return make_report("mp-odd-identity", OscillatorParams{}, worst, tolerance,
                       "P_{2n+1}^b(x; pi/2) against x S_n(x^2; 1, b, 1/2), n<=" +
                           std::to_string(n_max));
}

VerificationReport check_identity_even(double a, unsigned n_max, unsigned samples,
                                       double tolerance, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xs(0.05, 3.0);
    std::uniform_real_distribution<double> bs(0.2, 3.0);
    double worst = 0.0;
    unsigned first_bad = n_max + 1;
    for (unsigned s = 0; s < samples; ++s) {
        const double x = xs(rng);
        const double b = bs(rng);
        for (unsigned n = 0; n <= n_max; ++n) {
            const double k = 2.0 * n;
            const double coeff = (n % 2 ? -1.0 : 1.0) * std::exp(k * std::log(2.0) - std::lgamma(k + 1.0));
            const Complex lhs = meixner_pollaczek(2 * n, x, b, std::numbers::pi / 2.0);
            const Complex rhs = coeff * cdh_recurrence(n, x * x, {a, b, 0.5});
            const double r = rel_diff(lhs, rhs);
            if (r > tolerance) {
                first_bad = std::min(first_bad, n);
            }
            worst = std::max(worst, r);
        }
    }
    std::ostringstream notes;
    notes << "P_{2n}^b(x; pi/2) against S_n(x^2; " << a << ", b, 1/2), n<=" << n_max;
    if (first_bad <= n_max) {
        notes << "; mismatch from n=" << first_bad;
        if (a == 1.0) {
            notes << " (the parameter a = 0 form holds, see mp-even-identity-a0)";
        }
    }
    return make_report(a == 1.0 ? "mp-even-identity" : "mp-even-identity-a0", OscillatorParams{},
                       worst, tolerance, notes.str());
}

VerificationReport check_meixner_difference(unsigned n_max, unsigned samples, double tolerance,
                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xs(-3.0, 3.0);
    std::uniform_real_distribution<double> bs(0.2, 3.0);
    std::uniform_real_distribution<double> phis(0.2, std::numbers::pi - 0.2);
    double worst = 0.0;
    for (unsigned s = 0; s < samples; ++s) {
        const Complex x(xs(rng), 0.3 * xs(rng));
        const double b = bs(rng);
        // Half the samples at the angle the oscillator uses, half at random angles.
        const double phi = s % 2 == 0 ? std::numbers::pi / 2.0 : phis(rng);
        const Complex ep = std::exp(kI * phi);
        for (unsigned k = 0; k <= n_max; ++k) {
            const Complex t1 = (b + kI * x) * meixner_pollaczek(k, x - kI, b, phi) / ep;
            const Complex t2 = ep * (b - kI * x) * meixner_pollaczek(k, x + kI, b, phi);
            const Complex t3 = 2.0 * kI * (x * std::cos(phi) - (k + b) * std::sin(phi)) *
                               meixner_pollaczek(k, x, b, phi);
            const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
            worst = std::max(worst, std::abs(t1 - t2 - t3) / scale);
        }
    }
    return make_report("mp-difference", OscillatorParams{}, worst, tolerance,
                       "Meixner-Pollaczek difference equation, complex x, k<=" +
                           std::to_string(n_max));
}

VerificationReport check_cdh_difference(unsigned n_max, unsigned samples, double tolerance,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xs(-3.0, 3.0);
    double worst = 0.0;
    for (unsigned s = 0; s < samples; ++s) {
        const CdhParams p = random_cdh(rng, s % 2 == 1);
        const Complex x(xs(rng), 0.3 * xs(rng));
        const Complex a = p.a, b = p.b;
        auto y = [&](unsigned n, Complex t) { return cdh_recurrence(n, t * t, p); };
        for (unsigned n = 0; n <= n_max; ++n) {
            const Complex t1 = (a + kI * x) * (b + kI * x) * y(n, x - kI);
            const Complex t2 = (a - kI * x) * (b - kI * x) * y(n, x + kI);
            const Complex t3 = 2.0 * kI * x * (2.0 * n + a + b) * y(n, x);
            const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
            worst = std::max(worst, std::abs(t1 - t2 - t3) / scale);
        }
    }
    return make_report("cdh-difference", OscillatorParams{}, worst, tolerance,
                       "continuous dual Hahn difference equation (c = 1/2), complex x, n<=" +
                           std::to_string(n_max));
}

VerificationReport check_polynomial_difference(const OscillatorParams& params, unsigned n_max,
                                               const std::vector<Complex>& points,
                                               double tolerance) {
    const std::string name = "polynomial-difference";
    const SpectralSolution sol = compute_alpha_nu(params);
    if (sol.regime == Regime::Collapse) {
        return collapse_report(name, params);
    }
    const Complex a = sol.alpha, b = sol.nu;
    double worst = 0.0;
    for (unsigned n = 0; n <= n_max; ++n) {
        const Complex eps = 2.0 * n + a + b;
        auto omega = [&](Complex r) { return cdh_recurrence(n, r * r, {a, b, 0.5}); };
        for (const Complex rho : points) {
            const Complex t1 = (a + kI * rho) * (b + kI * rho) * omega(rho - kI);
            const Complex t2 = (a - kI * rho) * (b - kI * rho) * omega(rho + kI);
            const Complex t3 = 2.0 * kI * eps * rho * omega(rho);
            const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
            worst = std::max(worst, std::abs(t1 - t2 - t3) / scale);
        }
    }
    return make_report(name, params, worst, tolerance,
                       "polynomial part at eps_n = 2n + alpha + nu, n<=" + std::to_string(n_max));
}

VerificationReport check_series_termination(const OscillatorParams& params, unsigned n_max,
                                            const std::vector<Complex>& points,
                                            double tolerance) {
    const std::string name = "series-termination";
    const SpectralSolution sol = compute_alpha_nu(params);
    if (sol.regime == Regime::Collapse) {
        return collapse_report(name, params);
    }
    double shape = 0.0;
    double constant = 0.0;
    for (unsigned n = 0; n <= n_max; ++n) {
        const auto e = series_coefficients(n, sol);
        Complex num = 0.0;
        double den = 0.0;
        std::vector<Complex> series, cdh;
        for (const Complex rho : points) {
            series.push_back(evaluate_series(e, rho));
            cdh.push_back(cdh_series(n, rho * rho, {sol.alpha, sol.nu, 0.5}));
            num += std::conj(cdh.back()) * series.back();
            den += std::norm(cdh.back());
        }
        const Complex ratio = num / den;
        double top = 0.0, err = 0.0;
        for (std::size_t k = 0; k < points.size(); ++k) {
            err = std::max(err, std::abs(series[k] - ratio * cdh[k]));
            top = std::max(top, std::abs(series[k]));
        }
        shape = std::max(shape, err / top);
        constant = std::max(constant, std::abs(ratio - 1.0));
    }
    std::ostringstream notes;
    notes << "shape error against S_n up to one constant; max |constant - 1| = " << constant;
    return make_report(name, params, shape, tolerance, notes.str());
}

VerificationReport check_laguerre_limit(unsigned n, double z, double a,
                                        const std::vector<double>& mu_sequence,
                                        std::optional<double> final_tolerance) {
    if (n > 5) {
        throw ParameterError("check_laguerre_limit: n must be <= 5");
    }
    const double target = laguerre(n, a - 0.5, z);
    std::vector<double> errors;
    for (const double mu : mu_sequence) {
        const Complex s = cdh_recurrence(n, z * mu, {a, mu + 0.5, 0.5});
        const double scaled = s.real() / std::exp(std::lgamma(n + 1.0) + n * std::log(mu));
        errors.push_back(std::abs(scaled - target));
    }
    const bool exact = std::all_of(errors.begin(), errors.end(), [](double e) { return e == 0.0; });
    double residual = kInf;
    if (exact) {
        residual = 0.0;
    } else if (strictly_decreasing(errors)) {
        residual = errors.back();
    }
    std::ostringstream notes;
    notes << "n=" << n << " z=" << z << " a=" << a << " mu=" << format_sequence(mu_sequence)
          << " errors=" << format_sequence(errors);
    if (!exact && !strictly_decreasing(errors)) {
        notes << " (not strictly decreasing)";
    }
    return make_report("laguerre-limit", OscillatorParams{}, residual,
                       final_tolerance.value_or(kMonotoneOnly), notes.str());
}

VerificationReport check_nonrel_limit(unsigned n, const OscillatorParams& params_base,
                                      const std::vector<double>& c_sequence,
                                      const std::vector<double>& xi_grid) {
    if (params_base.g0() < -0.125) {
        throw ParameterError("check_nonrel_limit: requires g0 >= -1/8");
    }
    if (xi_grid.empty()) {
        throw ParameterError("check_nonrel_limit: empty xi grid");
    }
    const double d = nonrel_exponent(params_base);
    const double hw = params_base.quantum();
    const double x_unit = std::sqrt(params_base.hbar() / (params_base.m() * params_base.omega()));
    std::vector<double> e_alpha, e_nu, e_energy, e_shape;
    for (const double c : c_sequence) {
        const OscillatorParams p = params_base.with_c(c);
        const SpectralSolution sol = compute_alpha_nu(p);
        if (sol.regime == Regime::Collapse) {
            throw ParameterError("check_nonrel_limit: collapse regime at c = " + std::to_string(c));
        }
        const Complex binding = binding_energy(n, p) / hw;
        const Complex nu_minus_mu = binding - 2.0 * n - sol.alpha;
        e_alpha.push_back(std::abs(sol.alpha - (d + 0.5)));
        e_nu.push_back(std::abs(nu_minus_mu - 0.5));
        e_energy.push_back(std::abs(binding - (2.0 * n + d + 1.0)));

        const double root_mu = std::sqrt(p.mu());
        const double scale = 1.0 / std::sqrt(p.lambda());
        std::vector<Complex> rel;
        std::vector<double> nonrel;
        Complex num = 0.0;
        double den = 0.0;
        for (const double xi : xi_grid) {
            rel.push_back(scale * wavefunction(n, xi * root_mu, p, sol).value);
            nonrel.push_back(nonrel_wavefunction(n, xi * x_unit, p));
            num += std::conj(rel.back()) * nonrel.back();
            den += std::norm(rel.back());
        }
        const Complex fitted = num / den;
        double err = 0.0, top = 0.0;
        for (std::size_t k = 0; k < rel.size(); ++k) {
            err = std::max(err, std::abs(fitted * rel[k] - nonrel[k]));
            top = std::max(top, std::abs(nonrel[k]));
        }
        e_shape.push_back(err / top);
    }
    const bool monotone = converging(e_alpha) && converging(e_nu) && converging(e_energy) &&
                          converging(e_shape);
    std::ostringstream notes;
    notes << "n=" << n << " d=" << d << " c=" << format_sequence(c_sequence)
          << " |alpha-d-1/2|=" << format_sequence(e_alpha)
          << " |nu-mu-1/2|=" << format_sequence(e_nu)
          << " energy=" << format_sequence(e_energy) << " shape=" << format_sequence(e_shape);
    return make_report("nonrel-limit", params_base, monotone ? e_shape.back() : kInf,
                       kMonotoneOnly, notes.str());
}

VerificationReport check_operator_limit(const OscillatorParams& params_base,
                                        const std::vector<double>& c_sequence,
                                        const std::vector<double>& xi_grid) {
    if (params_base.g0() < -0.125) {
        throw ParameterError("check_operator_limit: requires g0 >= -1/8");
    }
    const double d = nonrel_exponent(params_base);
    // Unit-normalized non-relativistic eigenfunction in xi and its image
    // under c- = -(i/sqrt2)(d/dxi + xi - (d + 1/2)/xi).
    auto phi = [d](unsigned n, double xi) {
        const double norm = std::sqrt(2.0 * std::exp(std::lgamma(n + 1.0) - std::lgamma(n + d + 1.0)));
        return norm * std::pow(xi, d + 0.5) * std::exp(-0.5 * xi * xi) * laguerre(n, d, xi * xi);
    };
    auto lowered_phi = [d](unsigned n, double xi) -> Complex {
        if (n == 0) {
            return 0.0;
        }
        const double norm = std::sqrt(2.0 * std::exp(std::lgamma(n + 1.0) - std::lgamma(n + d + 1.0)));
        return kI * std::numbers::sqrt2 * norm * std::pow(xi, d + 1.5) * std::exp(-0.5 * xi * xi) *
               laguerre(n - 1, d + 1.0, xi * xi);
    };

    std::vector<double> ground, excited;
    for (const double c : c_sequence) {
        const OscillatorParams p = params_base.with_c(c);
        const SpectralSolution sol = compute_alpha_nu(p);
        const double root_mu = std::sqrt(p.mu());
        // psi(rho) in the xi variable with unit norm: mu^{1/4} psi(xi sqrt(mu)).
        const double amp = std::sqrt(root_mu);
        std::vector<Complex> pts;
        for (const double xi : xi_grid) {
            pts.emplace_back(xi * root_mu, 0.0);
        }
        ground.push_back(annihilation_residual(p, sol, pts, LadderOrdering::ShiftThenMultiply));

        const AnalyticFunction psi1 = [&](Complex r) { return wavefunction(1, r, p, sol).value; };
        Complex num = 0.0;
        double den = 0.0;
        for (const double xi : xi_grid) {
            const double t = phi(1, xi);
            num += t * amp * psi1(xi * root_mu);
            den += t * t;
        }
        const Complex k = num / den;
        double err = 0.0, top = 0.0;
        for (const double xi : xi_grid) {
            const Complex lhs =
                root_mu * amp * apply_ladder(Ladder::Lowering, psi1, xi * root_mu, sol, p);
            const Complex rhs = k * lowered_phi(1, xi);
            err = std::max(err, std::abs(lhs - rhs));
            top = std::max(top, std::abs(rhs));
        }
        excited.push_back(err / top);
    }
    const bool ground_ok = std::all_of(ground.begin(), ground.end(), [](double e) { return e <= 1e-9; });
    const bool ok = ground_ok && strictly_decreasing(excited);
    std::ostringstream notes;
    notes << "c=" << format_sequence(c_sequence) << " sqrt(mu) a- psi_0=" << format_sequence(ground)
          << " sqrt(mu) a- psi_1 vs c- psi_1: " << format_sequence(excited);
    return make_report("operator-limit", params_base, ok ? excited.back() : kInf, kMonotoneOnly,
                       notes.str());
}

RegimeSweep sweep_regimes(double g_lo, double g_hi, const std::vector<double>& c_list,
                          unsigned samples, const OscillatorParams& base) {
    if (!(g_lo < g_hi)) {
        throw ParameterError("sweep_regimes: need g_lo < g_hi");
    }
    RegimeSweep out;
    for (const double c : c_list) {
        const bool nonrel = std::isinf(c);
        const OscillatorParams pc = nonrel ? base : base.with_c(c);
        auto e0 = [&](double g) -> Complex {
            const OscillatorParams p = pc.with_g(g);
            return nonrel ? nonrel_energy_continued(0, p) : binding_energy(0, p);
        };
        auto collapsed = [&](double g) { return e0(g).imag() != 0.0; };
        const double closed =
            nonrel ? -base.hbar() * base.hbar() / (8.0 * base.m()) : critical_coupling(pc);

        std::ostringstream notes;
        notes.precision(15);
        notes << "c=" << c;
        double residual = kNaN;
        if (collapsed(g_lo) && !collapsed(g_hi)) {
            double lo = g_lo, hi = g_hi;
            for (int it = 0; it < 400 && hi - lo > 1e-12; ++it) {
                const double mid = 0.5 * (lo + hi);
                (collapsed(mid) ? lo : hi) = mid;
            }
            const double located = 0.5 * (lo + hi);
            residual = std::abs(located - closed);
            notes << " onset=" << located << " g_crit=" << closed;
        } else {
            notes << " onset not bracketed by [" << g_lo << ", " << g_hi << "]; g_crit=" << closed;
        }
        VerificationReport r = make_report("collapse-boundary", pc, residual, 1e-10, notes.str());
        out.reports.push_back(std::move(r));

        EnergyCurve curve;
        curve.c = c;
        curve.rest_energy = nonrel ? kInf : pc.rest_energy();
        curve.g = linspace(g_lo, g_hi, std::max(samples, 2u));
        for (const double g : curve.g) {
            curve.binding.push_back(e0(g));
        }
        out.curves.push_back(std::move(curve));
    }
    return out;
}

VerificationReport check_regime_invariants(const OscillatorParams& base) {
    unsigned violations = 0;
    unsigned cells = 0;
    std::string first;
    for (const double c : {0.25, 0.5, 1.0, 2.0, 4.0, 1000.0}) {
        const OscillatorParams pc = base.with_c(c);
        std::vector<double> gs = linspace(-10.0, 3.0, 261);
        const double w0 = pc.omega0();
        gs.push_back(critical_coupling(pc));
        gs.push_back(pc.hbar() * pc.hbar() / (8.0 * pc.m() * w0 * w0));
        for (const double g : gs) {
            const OscillatorParams p = pc.with_g(g);
            const SpectralSolution s = compute_alpha_nu(p);
            const Complex e = energy_level(0, p);
            bool ok = true;
            switch (s.regime) {
                case Regime::Real:
                    ok = s.alpha.imag() == 0.0 && s.nu.imag() == 0.0 && s.alpha.real() >= 0.5 &&
                         s.nu.real() >= 0.5 && e.imag() == 0.0;
                    break;
                case Regime::ComplexConjugate:
                    ok = s.nu == std::conj(s.alpha) && s.alpha_plus_nu().imag() == 0.0 &&
                         e.imag() == 0.0;
                    break;
                case Regime::Collapse:
                    ok = e.imag() != 0.0 && g < critical_coupling(p);
                    break;
            }
            ++cells;
            if (!ok) {
                if (violations++ == 0) {
                    first = g_note("first violation at g", g) + g_note(" c", c);
                }
            }
        }
    }
    return make_report("regime-invariants", base, violations, 0.0,
                       std::to_string(cells) + " (g, c) cells" + (first.empty() ? "" : "; " + first));
}

VerificationReport check_relosc_consistency(unsigned samples, std::uint64_t seed,
                                            double tolerance) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_c(std::log(0.3), std::log(10.0));
    double energy = 0.0;
    double continuity = 0.0;
    double shape = 0.0;
    const std::vector<Complex> pts = strip_points(8, seed + 100);
    for (unsigned s = 0; s < samples; ++s) {
        const OscillatorParams p = OscillatorParams::natural(0.0, std::exp(log_c(rng)));
        const SpectralSolution sol = compute_alpha_nu(p);
        for (unsigned n = 0; n <= 5; ++n) {
            const double e = energy_level(n, p).real();
            const double ref = p.quantum() * (2.0 * n + 1.0 + sol.nu_prime);
            energy = std::max(energy, std::abs(e - ref) / ref);
            const double bumped = energy_level(n, p.with_g(1e-6)).real();
            continuity = std::max(continuity, std::abs(bumped - e) / p.quantum());
        }
        // psi_n at g = 0 and the Meixner-Pollaczek form differ by one constant.
        if (s < 4) {
            for (unsigned n = 0; n <= 3; ++n) {
                std::vector<Complex> ratios;
                for (const Complex rho : pts) {
                    ratios.push_back(wavefunction(n, rho, p, sol).value /
                                     relosc_reference(n, rho, p).wavefunction);
                }
                for (const Complex r : ratios) {
                    shape = std::max(shape, rel_diff(r, ratios.front()));
                }
            }
        }
    }
    std::ostringstream notes;
    notes << "g=0 energy rel=" << energy << " (tol " << tolerance << ")"
          << "; |E_n(1e-6) - E_n(0)|/hbar omega=" << continuity << " (tol 1e-5)"
          << "; shape against the Meixner-Pollaczek form=" << shape << " (tol 1e-10)";
    const double residual = std::max({energy / tolerance, continuity / 1e-5, shape / 1e-10});
    return make_report("relosc-consistency", OscillatorParams::natural(0.0, 4.0), residual, 1.0,
                       notes.str());
}

VerificationReport check_free_theory(const OscillatorParams& params, unsigned samples,
                                     double tolerance, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double mc = params.m() * params.c();
    std::uniform_real_distribution<double> ps(-5.0 * mc, 5.0 * mc);
    std::uniform_real_distribution<double> xs(-10.0 * params.lambda(), 10.0 * params.lambda());
    double worst = 0.0;
    double modulus = 0.0;
    double mass_shell = 0.0;
    for (unsigned s = 0; s < samples; ++s) {
        const double p = ps(rng);
        const double x = xs(rng);
        const PlaneWaveState st = plane_wave_state(p, params);
        const AnalyticFunction xi = [&](Complex y) { return plane_wave(p, y, params); };
        const Complex v = xi(x);
        const Complex h = apply_free_hamiltonian(xi, x, params);
        const Complex mom = apply_momentum(xi, x, params);
        worst = std::max(worst, std::abs(h - st.energy * v) / std::abs(st.energy * v));
        worst = std::max(worst, std::abs(mom - p * v) / std::abs(p * v));
        modulus = std::max(modulus, std::abs(std::abs(v) - 1.0));
        mass_shell = std::max(mass_shell, std::abs(st.p0 * st.p0 - p * p - mc * mc) / (mc * mc));
    }
    std::ostringstream notes;
    notes << samples << " random (p, x); |xi|-1=" << modulus << " mass shell=" << mass_shell;
    return make_report("free-theory", params, std::max({worst, modulus, mass_shell}), tolerance,
                       notes.str());
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "orthonormality",     "quadrature-stability",  "tail-bound",
        "eigen-residual",     "ladder-annihilation",   "number-operator",
        "factorization",      "ladder-ordering",       "cdh-dual-path",
        "mp-odd-identity",    "mp-even-identity",      "mp-even-identity-a0",
        "mp-difference",      "cdh-difference",        "polynomial-difference",
        "series-termination", "laguerre-limit",        "nonrel-limit",
        "operator-limit",     "collapse-boundary",     "regime-invariants",
        "relosc-consistency", "free-theory",
    };
    return names;
}

std::vector<VerificationReport> run_verification_suite(const SuiteOptions& options) {
    for (const auto& name : options.only) {
        if (std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
            throw ParameterError("unknown check: " + name);
        }
    }
    if (!(options.tolerance_scale > 0.0) || !std::isfinite(options.tolerance_scale)) {
        throw ParameterError("tolerance scale must be finite and positive");
    }
    auto selected = [&](const std::string& name) {
        return options.only.empty() ||
               std::find(options.only.begin(), options.only.end(), name) != options.only.end();
    };

    const OscillatorParams& p = options.params;
    const unsigned n_max = options.n_max;
    const unsigned n_ladder = std::min(n_max, 5u);
    const std::vector<Complex> pts = strip_points(30, 11);
    const bool collapse = classify_regime(p) == Regime::Collapse;

    std::vector<VerificationReport> out;
    auto run = [&](const std::string& name, const std::function<VerificationReport()>& job) {
        if (!selected(name)) {
            return;
        }
        if (collapse && (name == "orthonormality" || name == "quadrature-stability" ||
                         name == "tail-bound" || name == "eigen-residual" ||
                         name == "ladder-annihilation" || name == "number-operator" ||
                         name == "factorization" || name == "ladder-ordering" ||
                         name == "polynomial-difference" || name == "series-termination")) {
            out.push_back(collapse_report(name, p));
            return;
        }
        try {
            VerificationReport r = job();
            // Reports from checks that only assert monotonicity keep their tolerance.
            if (r.tolerance != kMonotoneOnly) {
                r.tolerance *= options.tolerance_scale;
                r.passed = r.residual <= r.tolerance;
            }
            out.push_back(std::move(r));
        } catch (const Error& e) {
            out.push_back(make_report(name, p, kNaN, 0.0, e.what()));
        }
    };
    // Tolerances passed below are unscaled; run() applies the scale once.

    run("orthonormality", [&] {
        return check_orthonormality(p, n_max + 1, 1e-8, 1.0 + options.cn_perturbation);
    });
    run("quadrature-stability", [&] { return check_quadrature_stability(p, n_max + 1); });
    run("tail-bound", [&] { return check_tail_bound(p, n_max + 1); });
    run("eigen-residual", [&] { return check_eigen_residual(p, n_max, pts); });
    run("ladder-annihilation", [&] { return check_ground_annihilation(p, pts); });
    run("number-operator", [&] { return check_number_operator(p, n_ladder, pts); });
    run("factorization", [&] { return check_factorization(p, n_ladder, pts); });
    run("ladder-ordering", [&] { return check_ladder_ordering(p, pts); });
    run("cdh-dual-path", [&] { return check_cdh_dual_path(); });
    run("mp-odd-identity", [&] { return check_identity_odd(); });
    run("mp-even-identity", [&] { return check_identity_even(1.0); });
    run("mp-even-identity-a0", [&] { return check_identity_even(0.0); });
    run("mp-difference", [&] { return check_meixner_difference(); });
    run("cdh-difference", [&] { return check_cdh_difference(); });
    run("polynomial-difference", [&] { return check_polynomial_difference(p, n_max, pts); });
    run("series-termination", [&] { return check_series_termination(p, std::min(n_max, 6u), pts); });
    if (selected("laguerre-limit")) {
        const std::vector<double> mus = {1e2, 1e3, 1e4};
        // The error falls like C_n / mu. C_n is 37.4 at n = 3, z = 0, a = 2,
        // so that case misses the 1e-3 bound at mu = 1e4 and fails here.
        // The wider sweep asserts only monotone decay.
        run("laguerre-limit", [&] { return check_laguerre_limit(0, 1.0, 1.5, mus); });
        run("laguerre-limit", [&] { return check_laguerre_limit(1, 1.0, 1.5, mus); });
        run("laguerre-limit", [&] { return check_laguerre_limit(2, 1.0, 1.5, mus); });
        run("laguerre-limit", [&] { return check_laguerre_limit(3, 0.0, 2.0, mus); });
        for (unsigned n = 1; n <= 5; ++n) {
            for (const double z : {0.5, 1.0, 2.0}) {
                run("laguerre-limit",
                    [&] { return check_laguerre_limit(n, z, 1.5, mus, std::nullopt); });
            }
        }
    }
    if (selected("nonrel-limit") || selected("operator-limit")) {
        // The limit is taken from the suite's m, omega, hbar and g.
        if (p.g0() < -0.125) {
            run("nonrel-limit", [&] {
                return make_report("nonrel-limit", p, kNaN, 0.0, "no non-relativistic limit for g0 < -1/8");
            });
        } else {
            for (unsigned n = 0; n <= 2; ++n) {
                run("nonrel-limit", [&] {
                    return check_nonrel_limit(n, p, {10.0, 100.0, 1000.0}, {0.5, 1.0, 1.5, 2.0, 3.0});
                });
            }
            run("operator-limit", [&] {
                return check_operator_limit(p, {10.0, 100.0, 1000.0}, {0.5, 1.0, 2.0});
            });
        }
    }
    if (selected("collapse-boundary")) {
        try {
            for (auto& r : sweep_regimes(options.g_lo, options.g_hi, options.c_list, 2, p).reports) {
                run("collapse-boundary", [&] { return r; });
            }
        } catch (const Error& e) {
            out.push_back(make_report("collapse-boundary", p, kNaN, 0.0, e.what()));
        }
    }
    run("regime-invariants", [&] { return check_regime_invariants(p); });
    run("relosc-consistency", [&] { return check_relosc_consistency(); });
    run("free-theory", [&] { return check_free_theory(p); });
    return out;
}

}  // namespace relosc
