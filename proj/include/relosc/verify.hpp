#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relosc/oscillator.hpp"
#include "relosc/specfun.hpp"

namespace relosc {

struct QuadraturePanel {
    double lo = 0.0;
    double hi = 0.0;
    unsigned nodes = 0;
};

/// Composite Gauss-Legendre rule on [0, R] plus a bound on what it leaves out.
struct QuadratureGrid {
    std::vector<QuadraturePanel> panels;
    /// Nodes per panel on [0, near_limit]; panels beyond carry far_nodes.
    unsigned nodes_per_panel = 64;
    unsigned far_nodes_per_panel = 16;
    double truncation_radius = 0.0;
    /// Upper bound on max_n of the integral of |psi_n|^2 over [R, inf).
    double tail_bound = 0.0;
    std::vector<double> abscissae;
    std::vector<double> weights;
};

struct GridOptions {
    unsigned near_nodes = 64;
    unsigned far_nodes = 16;
    double near_limit = 10.0;
    double panel_width = 1.0;
    /// Overrides the default R = max(40, 10 Re nu).
    std::optional<double> truncation_radius;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(unsigned n);

/// Grid for the first n_states eigenfunctions. R grows past the default
/// until the decay envelope rho^p e^{-pi rho} is monotone beyond it.
/// Throws CollapseError in the collapse regime.
QuadratureGrid make_quadrature_grid(const OscillatorParams& params, unsigned n_states,
                                    const GridOptions& options = {});

/// Bound on the integral of |psi_n|^2 over [R, inf) from the asymptotic form
/// C rho^p e^{-pi rho}, p = 2 Re(alpha + nu) - 1 + 4n, with C fitted just past R
/// and a safety factor of 2.
double tail_envelope_bound(unsigned n, const OscillatorParams& params, double radius);

/// Row-major square matrix.
struct ComplexMatrix {
    unsigned size = 0;
    std::vector<Complex> data;

    Complex& operator()(unsigned i, unsigned j) { return data[i * size + j]; }
    const Complex& operator()(unsigned i, unsigned j) const { return data[i * size + j]; }
};

/// G[n][m] = integral over [0, R] of psi_n conj(psi_m), n, m < N.
/// cn_scale multiplies every normalization constant (fault injection).
/// Throws GridTooSmallError when grid.tail_bound > tolerance / 10.
ComplexMatrix overlap_matrix(unsigned n_states, const OscillatorParams& params,
                             const QuadratureGrid& grid, double tolerance = 1e-8,
                             double cn_scale = 1.0);

/// max |G - I|.
double identity_deviation(const ComplexMatrix& g);

struct VerificationReport {
    std::string check_name;
    OscillatorParams params;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string notes;
};

/// passed is set from residual <= tolerance; a NaN residual fails.
VerificationReport make_report(std::string name, const OscillatorParams& params, double residual,
                               double tolerance, std::string notes = {});

/// Deterministic sample points x + iy, x in (0.2, 15], |y| <= 0.5.
std::vector<Complex> strip_points(unsigned count, std::uint64_t seed);

VerificationReport check_orthonormality(const OscillatorParams& params, unsigned n_states,
                                        double tolerance = 1e-8, double cn_scale = 1.0);
VerificationReport check_quadrature_stability(const OscillatorParams& params, unsigned n_states,
                                              double tolerance = 1e-10);
VerificationReport check_tail_bound(const OscillatorParams& params, unsigned n_states);

VerificationReport check_eigen_residual(const OscillatorParams& params, unsigned n_max,
                                        const std::vector<Complex>& points,
                                        double tolerance = 1e-8);
VerificationReport check_ground_annihilation(const OscillatorParams& params,
                                             const std::vector<Complex>& points,
                                             double tolerance = 1e-9);
VerificationReport check_number_operator(const OscillatorParams& params, unsigned n_max,
                                         const std::vector<Complex>& points,
                                         double tolerance = 1e-8);
VerificationReport check_factorization(const OscillatorParams& params, unsigned n_max,
                                       const std::vector<Complex>& points,
                                       double tolerance = 1e-8);
/// Both readings of the half-shift ordering: the adopted one must annihilate
/// psi_0, the other must not.
VerificationReport check_ladder_ordering(const OscillatorParams& params,
                                         const std::vector<Complex>& points,
                                         double tolerance = 1e-9);

VerificationReport check_cdh_dual_path(unsigned n_max = 20, unsigned samples = 200,
                                       double tolerance = 1e-10, std::uint64_t seed = 1);
/// Odd Meixner-Pollaczek index against x S_n(x^2; 1, b, 1/2).
VerificationReport check_identity_odd(unsigned n_max = 8, unsigned samples = 50,
                                      double tolerance = 1e-10, std::uint64_t seed = 2);
/// Even index against S_n(x^2; a, b, 1/2). Only a = 0 holds; the suite also
/// runs a = 1 and reports it as failing.
VerificationReport check_identity_even(double a, unsigned n_max = 8, unsigned samples = 50,
                                       double tolerance = 1e-10, std::uint64_t seed = 3);
VerificationReport check_meixner_difference(unsigned n_max = 8, unsigned samples = 50,
                                            double tolerance = 1e-9, std::uint64_t seed = 4);
VerificationReport check_cdh_difference(unsigned n_max = 8, unsigned samples = 50,
                                        double tolerance = 1e-9, std::uint64_t seed = 5);
/// The polynomial part S_n(rho^2; alpha, nu, 1/2) against its own difference
/// equation with eps_n = 2n + alpha + nu.
VerificationReport check_polynomial_difference(const OscillatorParams& params, unsigned n_max,
                                               const std::vector<Complex>& points,
                                               double tolerance = 1e-9);
VerificationReport check_series_termination(const OscillatorParams& params, unsigned n_max,
                                            const std::vector<Complex>& points,
                                            double tolerance = 1e-9);

/// Errors |S_n(z mu; a, mu + 1/2, 1/2) / (n! mu^n) - L_n^{a-1/2}(z)| along
/// mu_sequence; passes when they strictly decrease and the last is
/// <= final_tolerance (no bound when empty). n = 0 is exact and passes with
/// all errors 0.
VerificationReport check_laguerre_limit(unsigned n, double z, double a,
                                        const std::vector<double>& mu_sequence,
                                        std::optional<double> final_tolerance = 1e-3);

/// Along c_sequence: alpha -> d + 1/2, nu - mu -> 1/2, E_n - mc^2 -> hbar omega (2n + d + 1)
/// and the shape of lambda^{-1/2} psi_n(xi sqrt(mu)) against the
/// non-relativistic eigenfunction after fitting one complex constant.
/// Every error sequence must strictly decrease.
VerificationReport check_nonrel_limit(unsigned n, const OscillatorParams& params_base,
                                      const std::vector<double>& c_sequence,
                                      const std::vector<double>& xi_grid);

/// sqrt(mu) a- psi_n(xi sqrt(mu)) against c- psi_n^nonrel(xi) for n = 0, 1.
/// The n = 0 action must vanish; the n = 1 error must strictly decrease.
VerificationReport check_operator_limit(const OscillatorParams& params_base,
                                        const std::vector<double>& c_sequence,
                                        const std::vector<double>& xi_grid);

/// One Fig. 2 curve.
struct EnergyCurve {
    /// Infinity marks the non-relativistic panel.
    double c = 0.0;
    double rest_energy = 0.0;
    std::vector<double> g;
    /// E_0 - m c^2 (or the non-relativistic E_0).
    std::vector<Complex> binding;
};

struct RegimeSweep {
    std::vector<VerificationReport> reports;
    std::vector<EnergyCurve> curves;
};

/// For each c: bisection on the onset of Im E_0 != 0 inside [g_lo, g_hi],
/// compared with the closed form g_crit; plus E_0 on `samples` g values.
/// An infinite c uses the non-relativistic spectrum.
RegimeSweep sweep_regimes(double g_lo, double g_hi, const std::vector<double>& c_list,
                          unsigned samples, const OscillatorParams& base = {});

/// Regime invariants on a (g, c) grid: real alpha, nu >= 1/2; conjugate pair
/// with real sum; complex spectrum exactly in collapse.
VerificationReport check_regime_invariants(const OscillatorParams& base = {});

/// g = 0 spectrum against hbar omega (2n + 1 + nu') for random c, continuity
/// at g = 1e-6, and eigen-residual of the Meixner-Pollaczek wavefunction.
VerificationReport check_relosc_consistency(unsigned samples = 20, std::uint64_t seed = 6,
                                            double tolerance = 1e-12);

/// Free Hamiltonian and momentum on plane waves at random (p, x).
VerificationReport check_free_theory(const OscillatorParams& params, unsigned samples = 50,
                                     double tolerance = 1e-12, std::uint64_t seed = 7);

struct SuiteOptions {
    OscillatorParams params;
    unsigned n_max = 8;
    /// Multiplies every tolerance.
    double tolerance_scale = 1.0;
    /// Relative perturbation applied to c_n in the orthonormality check.
    double cn_perturbation = 0.0;
    /// Run only these checks; empty runs all.
    std::vector<std::string> only;
    double g_lo = -10.0;
    double g_hi = 3.0;
    std::vector<double> c_list = {4.0, 2.0, 1.0, 0.5, 0.25};
};

/// Names accepted by SuiteOptions::only, in execution order.
const std::vector<std::string>& check_names();

/// Throws ParameterError on an unknown name in options.only.
std::vector<VerificationReport> run_verification_suite(const SuiteOptions& options);

}  // namespace relosc
