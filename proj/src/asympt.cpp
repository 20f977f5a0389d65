#include "powcount/asympt.hpp"

#include "powcount/errors.hpp"
#include "powcount/specfun.hpp"

#include <cfloat>
#include <cmath>
#include <complex>
#include <string>

namespace powcount {

const char* formula_name(AsymFormula f) {
    switch (f) {
        case AsymFormula::theorem_w_quad: return "theorem-W-quad";
        case AsymFormula::corollary_leading: return "corollary-leading";
    }
    return "?";
}

AsymEstimate AsymEstimate::make(double value_log, AsymFormula f) {
    AsymEstimate e;
    e.value_log = value_log;
    e.formula = f;
    if (value_log < 709.0 && value_log > -745.0) e.value = std::exp(value_log);
    return e;
}

nlohmann::ordered_json to_json(const AsymEstimate& e) {
    nlohmann::ordered_json j;
    j["formula"] = formula_name(e.formula);
    j["value_log"] = e.value_log;
    if (e.value)
        j["value"] = *e.value;
    else
        j["value"] = nullptr;
    return j;
}

WResult w_quadrature_detail(double alpha, double beta, double lambda, const QuadratureSpec& quad) {
    if (!(alpha > 0.0) || !(beta > 0.0) || !(lambda > 0.0))
        throw std::domain_error("w_quadrature: alpha, beta, lambda must be positive");

    // Reduced integrand with the u = 0 peak exp((1+1/alpha)lambda) factored
    // out; the saddle width is ~ lambda^{-1/2}.
    const auto integrand = [&](double u) {
        const std::complex<double> zz(1.0, u);
        const std::complex<double> expo =
            lambda * ((std::pow(zz, -alpha) - 1.0) / alpha + std::complex<double>(0.0, u));
        return std::exp(expo) * std::pow(zz, beta);
    };

    const double width = 1.0 / std::sqrt(lambda * (1.0 + alpha));
    const QuadResult qr =
        integrate_panels(integrand, peak_panel_boundaries(std::min(width, 0.25), 1.0), quad, 14);
    if (!qr.converged)
        throw quadrature_error("w_quadrature: did not converge (last delta " +
                                   std::to_string(qr.err_estimate) + ")",
                               qr.err_estimate);
    const double reduced = qr.value.real() / (2.0 * M_PI);
    if (!(reduced > 0.0))
        throw consistency_error("w_quadrature: reduced integral not positive");

    WResult res;
    res.log_value = (1.0 + 1.0 / alpha) * lambda + std::log(reduced);
    res.imag_ratio = std::abs(qr.value.imag()) / std::max(std::abs(qr.value), DBL_MIN);
    res.evaluations = qr.evaluations;
    return res;
}

double w_quadrature(double alpha, double beta, double lambda, const QuadratureSpec& quad) {
    return w_quadrature_detail(alpha, beta, lambda, quad).log_value;
}

double w_saddle_leading(double alpha, double beta, double lambda) {
    if (!(alpha > 0.0) || !(beta > 0.0) || !(lambda > 0.0))
        throw std::domain_error("w_saddle_leading: alpha, beta, lambda must be positive");
    (void)beta;
    return (1.0 + 1.0 / alpha) * lambda - 0.5 * std::log(lambda) -
           0.5 * std::log(2.0 * M_PI * (1.0 + alpha));
}

AsymEstimate s_asym_theorem(const CountParams& params, long n, const QuadratureSpec& quad) {
    require_closed_product(params, "s_asym_theorem");
    if (n < 1) throw std::domain_error("s_asym_theorem: n must be >= 1");
    const int r = params.r;
    const double kr = kappa(r);
    const double ln_n = std::log(static_cast<double>(n));
    double log_value;
    if (params.v == 1) {
        const double lambda = kr * std::pow(static_cast<double>(n), 1.0 / (1.0 + r));
        log_value = 1.5 * std::log(kr) - 0.5 * ((r + 1) * M_LN2 + r * std::log(M_PI)) -
                    1.5 / (1.0 + 1.0 / r) * ln_n + w_quadrature(1.0 / r, 0.5, lambda, quad);
    } else {
        const double eta = eta_real(1.0 / r);
        const double lambda = kr * eta * std::pow(n / eta, 1.0 / (1.0 + r));
        log_value = 1.25 * std::log(kr) - 0.25 * (r * M_LN2 + (r + 1) * std::log(M_PI)) +
                    1.25 / (1.0 + 1.0 / r) * (std::log(eta) - ln_n) +
                    w_quadrature(1.0 / r, 0.25, lambda, quad);
    }
    return AsymEstimate::make(log_value, AsymFormula::theorem_w_quad);
}

AsymEstimate s_asym_generic(const CountParams& params, long n, const QuadratureSpec& quad) {
    require_closed_product(params, "s_asym_generic");
    if (n < 1) throw std::domain_error("s_asym_generic: n must be >= 1");
    const SaddleParams sp = saddle_params(params);
    const double lambda = std::pow(sp.kappa, 1.0 / (1.0 + sp.alpha)) *
                          std::pow(static_cast<double>(n), sp.alpha / (1.0 + sp.alpha));
    const double log_value = std::log(sp.gamma) +
                             (1.0 + sp.beta) / (1.0 + sp.alpha) *
                                 (std::log(sp.kappa) - std::log(static_cast<double>(n))) +
                             w_quadrature(sp.alpha, sp.beta, lambda, quad);
    return AsymEstimate::make(log_value, AsymFormula::theorem_w_quad);
}

AsymEstimate s_asym_leading(const CountParams& params, long n) {
    require_closed_product(params, "s_asym_leading");
    if (n < 1) throw std::domain_error("s_asym_leading: n must be >= 1");
    const int r = params.r;
    const double kr = kappa(r);
    const double ln_n = std::log(static_cast<double>(n));
    const double n_pow = std::pow(static_cast<double>(n), 1.0 / (1.0 + r));
    double log_value;
    if (params.v == 1) {
        log_value = -0.5 * (r + 2) * M_LN2 - 0.5 * (r + 1) * std::log(M_PI) -
                    0.5 * std::log1p(1.0 / r) + std::log(kr) -
                    (3.0 * r + 1.0) / (2.0 + 2.0 * r) * ln_n + (1.0 + r) * kr * n_pow;
    } else {
        const double eta = eta_real(1.0 / r);
        log_value = -0.25 * (r + 2) * M_LN2 - 0.25 * (r + 3) * std::log(M_PI) -
                    0.5 * std::log1p(1.0 / r) + 3.0 * r / (4.0 * r + 4.0) * std::log(eta) +
                    0.75 * std::log(kr) - (5.0 * r + 2.0) / (4.0 + 4.0 * r) * ln_n +
                    (1.0 + r) * kr * std::pow(eta, r / (1.0 + r)) * n_pow;
    }
    return AsymEstimate::make(log_value, AsymFormula::corollary_leading);
}

} // namespace powcount
