#ifndef POWCOUNT_ASYMPT_HPP
#define POWCOUNT_ASYMPT_HPP

#include "powcount/params.hpp"
#include "powcount/quadrature.hpp"

#include "json.hpp"

#include <optional>

namespace powcount {

enum class AsymFormula { theorem_w_quad, corollary_leading };

const char* formula_name(AsymFormula f);

// An asymptotic estimate carried in log scale; the linear value is attached
// only when exp(value_log) is representable in double.
struct AsymEstimate {
    double value_log = 0.0;
    std::optional<double> value;
    AsymFormula formula = AsymFormula::theorem_w_quad;

    static AsymEstimate make(double value_log, AsymFormula f);
};

nlohmann::ordered_json to_json(const AsymEstimate& e);

struct WResult {
    double log_value = 0.0;
    double imag_ratio = 0.0;
    int evaluations = 0;
};

// log of W_{alpha,beta}(lambda) =
//   (1/2pi) \int_{-1}^{1} (1+iu)^beta exp(lambda(alpha^{-1}(1+iu)^{-alpha} + (1+iu))) du,
// computed with the peak value exp((1+1/alpha)lambda) factored out. Relative
// error <= 1e-8 for lambda <= 50 and <= 1e-6 for lambda <= 1e4 at the
// default spec.
WResult w_quadrature_detail(double alpha, double beta, double lambda,
                            const QuadratureSpec& quad = {});
double w_quadrature(double alpha, double beta, double lambda, const QuadratureSpec& quad = {});

// log of the saddle-point leading form e^{(1+1/alpha)lambda} / (sqrt(lambda) sqrt(2pi(1+alpha))).
// beta does not enter the leading term; the parameter is kept for signature
// symmetry with w_quadrature.
double w_saddle_leading(double alpha, double beta, double lambda);

// The uniform W-form approximation of s_{r,v}(n) (v in {1,2}), assembled
// from the explicit displays:
//   v=1: kappa_r^{3/2} (2^{r+1} pi^r)^{-1/2} n^{-(3/2)/(1+1/r)} W_{1/r,1/2}(kappa_r n^{1/(1+r)})
//   v=2: kappa_r^{5/4} (2^r pi^{r+1})^{-1/4} (eta(1/r)/n)^{(5/4)/(1+1/r)}
//        W_{1/r,1/4}(kappa_r eta(1/r) (n/eta(1/r))^{1/(1+r)})
AsymEstimate s_asym_theorem(const CountParams& params, long n, const QuadratureSpec& quad = {});

// The same quantity assembled generically from saddle_params:
//   gamma (kappa/n)^{(1+beta)/(1+alpha)} W_{alpha,beta}(kappa^{1/(1+alpha)} n^{alpha/(1+alpha)}).
// Must agree with s_asym_theorem to ~1e-12 in log scale (asserted in tests).
AsymEstimate s_asym_generic(const CountParams& params, long n, const QuadratureSpec& quad = {});

// Leading-order closed forms:
//   v=1: 2^{-(r+2)/2} pi^{-(r+1)/2} (1+1/r)^{-1/2} kappa_r n^{-(3r+1)/(2+2r)} e^{(1+r)kappa_r n^{1/(1+r)}}
//   v=2: 2^{-(r+2)/4} pi^{-(r+3)/4} (1+1/r)^{-1/2} eta(1/r)^{3r/(4r+4)} kappa_r^{3/4}
//        n^{-(5r+2)/(4+4r)} e^{(1+r)kappa_r eta(1/r)^{r/(1+r)} n^{1/(1+r)}}
AsymEstimate s_asym_leading(const CountParams& params, long n);

} // namespace powcount

#endif
