#ifndef POWCOUNT_QUADRATURE_HPP
#define POWCOUNT_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace powcount {

enum class QuadRule { gauss_legendre, tanh_sinh };

struct QuadratureSpec {
    QuadRule rule = QuadRule::gauss_legendre;
    int panels = 1;          // refinement doublings applied to the initial panels
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
};

struct QuadResult {
    std::complex<double> value{};
    double err_estimate = 0.0; // |last refinement delta|
    int evaluations = 0;
    bool converged = false;
};

using ComplexIntegrand = std::function<std::complex<double>(double)>;

// Integrates f over the union of panels [b0,b1],[b1,b2],... and refines by
// splitting every panel in half until successive results agree to
// max(abs_tol, rel_tol*|I|) or max_doublings is exhausted (converged=false
// then; callers decide whether that is an error). Summation order is fixed,
// so results are deterministic.
QuadResult integrate_panels(const ComplexIntegrand& f, std::vector<double> boundaries,
                            const QuadratureSpec& spec, int max_doublings = 12);

// Panel boundaries packed around a peak at 0: +-{w, 2w, 4w, ...} up to
// +-limit. Suited to integrands with a sharp maximum at the center.
std::vector<double> peak_panel_boundaries(double half_width, double limit);

} // namespace powcount

#endif
