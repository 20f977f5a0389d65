#ifndef POWCOUNT_SPECFUN_HPP
#define POWCOUNT_SPECFUN_HPP

#include "powcount/params.hpp"

namespace powcount {

// Real-argument special functions with documented precision contracts.
// Everything here is plain double precision; downstream tolerances are set
// accordingly (the checks need <= 6 significant digits, the functions
// themselves deliver ~13-15).

// Gamma(x) for x > 0; relative error <= 1e-13 on (0, 50].
// Lanczos rational approximation (g = 7, 9 terms); arguments below 1 are
// lifted through Gamma(x) = Gamma(x+1)/x, so no reflection is needed.
double gamma_real(double x);

// Riemann zeta(s) for s > 1; relative error <= 1e-12, uniformly down to
// s = 1+ (Euler-Maclaurin with a fixed cutoff, not raw summation).
double zeta_real(double s);

// Dirichlet eta(s) = sum (-1)^{n-1} n^{-s} for s > 0.
// s > 1 uses eta = (1 - 2^{1-s}) zeta(s) (the prefactor via expm1, so there
// is no cancellation as s -> 1+); 0 < s <= 1 uses Cohen-Rodriguez
// Villegas-Zagier acceleration of the alternating series.
double eta_real(double s);

// The growth constant kappa_r > 0, defined by
//   kappa_r^{1+1/r} = 2 r^{-1} (1 - 2^{-1-1/r}) zeta(1+1/r) Gamma(1+1/r).
// (The equivalent r^{-2}...Gamma(1/r) form is asserted in tests.)
double kappa(int r);

// Parameters of the z -> 0 asymptotic G_{r,v}(e^{-z}) ~ gamma * z^beta *
// exp(kappa * alpha^{-1} * z^{-alpha}), and of the coefficient formula
// built on it.
struct SaddleParams {
    double alpha; // 1/r
    double beta;  // 1/2 (v=1) or 1/4 (v=2)
    double gamma; // (2^{r+1} pi^r)^{-1/2} (v=1) or (2^r pi^{r+1})^{-1/4} (v=2)
    double kappa; // kappa_r^{1+1/r} (v=1) or eta(1/r) * kappa_r^{1+1/r} (v=2)
};

// v must be 1 or 2.
SaddleParams saddle_params(const CountParams& params);

} // namespace powcount

#endif
