#ifndef POWCOUNT_EXPSUM_HPP
#define POWCOUNT_EXPSUM_HPP

#include "powcount/params.hpp"
#include "powcount/scan_report.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace powcount {

// Numerical evidence scans for the minor-arc machinery. These are evidence,
// not proofs: thresholds are configurable defaults; a FAIL triggers
// investigation, not falsification.

// sum_{L < n <= 2L} e^{2 pi i n^r y}. Phases are reduced exactly: n^r is an
// exact 128-bit integer and frac(n^r * y) is computed from y's 53-bit
// mantissa in fixed point, so no precision is lost even at n^r ~ 1e18.
// Requires (2L)^r < 2^127 (guard_error otherwise; covers r <= 3 at L = 1e6).
// Kahan-compensated summation.
std::complex<double> weyl_sum(int r, double y, double L);

// frac(n^r * y) in [0, 1), exposed for testing against exact rationals.
double weyl_phase_frac(int r, long n, double y);

// Reduced fractions d/h with h <= max_h and 0 < d/h <= 1/2, ascending.
std::vector<std::pair<long, long>> farey_fractions(int max_h);

// |weyl_sum|/L over y in (L^-r, 1/2], on small-denominator rationals
// (h <= 10; the hardest points) plus a uniform fill of y_samples points.
// PASS iff max <= 1 - delta; the report label carries the empirical delta.
ScanReport weyl_bound_scan(int r, double L, int y_samples, double delta = 0.05);

// Per x in a decreasing grid: statistic = x^{1/r} * min over y in [x, pi]
// of Re(log G(e^-x) - log G(e^{-x-iy})). PASS iff every statistic >= floor_c
// (evidence for the x^{-1/r} minor-arc lower bound).
ScanReport ratio_lowerbound_scan(const CountParams& params, const std::vector<double>& x_grid,
                                 int y_samples, double floor_c = 0.1, double log_g_tol = 1e-10);

} // namespace powcount

#endif
