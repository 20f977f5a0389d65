#ifndef POWCOUNT_GFEVAL_HPP
#define POWCOUNT_GFEVAL_HPP

#include "powcount/params.hpp"
#include "powcount/quadrature.hpp"
#include "powcount/scan_report.hpp"

#include <complex>
#include <vector>

namespace powcount {

// A complex value carried in log scale: represents
// exp(log_modulus + i*argument), with the argument normalized to (-pi, pi].
// G_{r,v}(e^{-z}) grows like exp(c*x^{-1/r}) as x -> 0, so the value itself
// is never materialized where it could overflow.
struct ComplexEval {
    double log_modulus = 0.0;
    double argument = 0.0;

    // Build from a log-value L (the represented number is exp(L)).
    static ComplexEval from_log(std::complex<double> log_value);

    std::complex<double> log_value() const { return {log_modulus, argument}; }
    std::complex<double> value() const; // may overflow to inf; callers beware
};

// log G_{r,v}(e^{-z}) for Re z > 0, v in {1,2}, by the double series over
// odd ell and j >= 1:
//   v=1: 2 sum 1/ell sum_j q^{j^r ell},   v=2: 2 sum 1/ell sum_j q^{j^r ell}/(1+q^{j^r ell}),
// with q = e^{-z}, truncated once j^r*ell*Re(z) > ln(1/tol)+5. Absolute error
// <= tol on the log scale. Throws precision_error if tol is below what
// double arithmetic can honor at this z.
ComplexEval log_g(const CountParams& params, std::complex<double> z, double tol = 1e-12);

// The z -> 0 approximation beta*log z + kappa/alpha * z^{-alpha} + log gamma
// (principal branches), valid on |arg z| <= pi/4.
ComplexEval log_g_asym(const CountParams& params, std::complex<double> z);

struct ResidualScanOptions {
    double p = 1.0;      // required log-log decay rate
    double tol = 1e-12;  // log_g truncation tolerance
};

// Compares log_g against log_g_asym on a decreasing real grid. Residuals at
// or below the per-point measurement floor (tol + 4*eps*|log G|) carry no
// information about the true remainder and are excluded from the
// monotonicity/slope decision; with fewer than two resolvable points the
// scan is INCONCLUSIVE. `worst` carries the fitted slope, `threshold` the
// required p.
ScanReport asym_residual_scan(const CountParams& params, const std::vector<double>& x_grid,
                              const ResidualScanOptions& options = {});

struct CauchyOptions {
    long max_n = 500;       // double-precision exponentials suffice below this
    double log_g_tol = 1e-12;
    int max_doublings = 12;
    bool half_range = false; // integrate [0,pi] and double the real part
};

struct CauchyResult {
    double value = 0.0;         // estimate of s_{r,v}(n)
    double saddle_radius = 0.0; // x = (kappa/n)^{1/(alpha+1)}
    double log_peak = 0.0;      // log G(e^{-x}) + n x
    double imag_ratio = 0.0;    // |Im I| / |I| of the normalized integral
    double quad_err = 0.0;
    int evaluations = 0;
};

// Numerical Cauchy coefficient extraction at the saddle radius:
//   s_{r,v}(n) = (1/2pi) \int_{-pi}^{pi} G(e^{-x-iy}) e^{n(x+iy)} dy,
// evaluated in log scale and rescaled by the peak before quadrature.
CauchyResult cauchy_coefficient_detail(const CountParams& params, long n,
                                       const QuadratureSpec& quad, const CauchyOptions& options = {});

double cauchy_coefficient(const CountParams& params, long n, const QuadratureSpec& quad);

} // namespace powcount

#endif
