#include "powcount/gfeval.hpp"

#include "powcount/errors.hpp"
#include "powcount/specfun.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <string>

namespace powcount {

namespace {

double normalize_argument(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a > M_PI) a -= 2.0 * M_PI;
    if (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

// j^r against a limit; 0 means "exceeds".
long ipow_capped(long base, int exp, long limit) {
    long acc = 1;
    for (int i = 0; i < exp; ++i) {
        if (acc > limit / base) return 0;
        acc *= base;
    }
    return acc;
}

// Scale estimate of |log G| used for precision-floor checks; the asymptotic
// main term is a safe overestimate near z = 0 and harmless elsewhere.
double log_g_scale(const SaddleParams& sp, std::complex<double> z) {
    const double az = std::abs(z);
    return sp.kappa / sp.alpha * std::pow(az, -sp.alpha) +
           std::fabs(sp.beta * std::log(az)) + std::fabs(std::log(sp.gamma));
}

} // namespace

ComplexEval ComplexEval::from_log(std::complex<double> log_value) {
    return ComplexEval{log_value.real(), normalize_argument(log_value.imag())};
}

std::complex<double> ComplexEval::value() const {
    return std::exp(std::complex<double>(log_modulus, argument));
}

ComplexEval log_g(const CountParams& params, std::complex<double> z, double tol) {
    require_closed_product(params, "log_g");
    const double x = z.real();
    const double y = z.imag();
    if (!(x > 0.0)) throw std::domain_error("log_g: requires Re(z) > 0");
    if (!(tol > 0.0)) throw std::domain_error("log_g: tol must be positive");

    const SaddleParams sp = saddle_params(params);
    const double floor = 8.0 * DBL_EPSILON * (1.0 + log_g_scale(sp, z));
    if (tol < floor)
        throw precision_error("log_g: tol = " + std::to_string(tol) +
                              " below the double-precision floor " + std::to_string(floor) +
                              " at this z");

    const double T = std::log(1.0 / tol) + 5.0; // discarded terms < e^{-T} with geometric tails
    const long a_cap = static_cast<long>(T / x) + 1;

    std::complex<long double> acc = 0.0L;
    for (long ell = 1; ell * x <= T; ell += 2) {
        const long j_cap = a_cap / ell;
        for (long j = 1;; ++j) {
            const long jr = ipow_capped(j, params.r, j_cap);
            if (jr == 0) break;
            const long a = jr * ell;
            const double w = a * x;
            if (w > T) break;
            const double mod = std::exp(-w);
            const double ph = -a * y;
            std::complex<double> t(mod * std::cos(ph), mod * std::sin(ph));
            if (params.v == 2) t /= 1.0 + t;
            acc += std::complex<long double>(t) * (2.0L / ell);
        }
    }
    return ComplexEval::from_log(std::complex<double>(acc));
}

ComplexEval log_g_asym(const CountParams& params, std::complex<double> z) {
    require_closed_product(params, "log_g_asym");
    if (z == std::complex<double>(0.0, 0.0))
        throw std::domain_error("log_g_asym: z must be nonzero");
    if (std::fabs(std::arg(z)) > M_PI / 4.0 + 1e-12)
        throw std::domain_error("log_g_asym: |arg z| must be <= pi/4");
    const SaddleParams sp = saddle_params(params);
    const std::complex<double> L = sp.beta * std::log(z) +
                                   sp.kappa / sp.alpha * std::pow(z, -sp.alpha) +
                                   std::log(sp.gamma);
    return ComplexEval::from_log(L);
}

ScanReport asym_residual_scan(const CountParams& params, const std::vector<double>& x_grid,
                              const ResidualScanOptions& options) {
    require_closed_product(params, "asym_residual_scan");
    if (x_grid.empty()) throw std::invalid_argument("asym_residual_scan: empty grid");
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        if (!(x_grid[i] > 0.0))
            throw std::invalid_argument("asym_residual_scan: grid points must be positive");
        if (i > 0 && !(x_grid[i] < x_grid[i - 1]))
            throw std::invalid_argument("asym_residual_scan: grid must decrease toward 0");
    }

    ScanReport report;
    report.label = "asym-residual r=" + std::to_string(params.r) + " v=" + std::to_string(params.v);
    report.grid = x_grid;
    report.threshold = options.p;

    for (double x : x_grid) {
        const ComplexEval lg = log_g(params, {x, 0.0}, options.tol);
        const ComplexEval la = log_g_asym(params, {x, 0.0});
        const double delta = std::abs(lg.log_value() - la.log_value());
        const double floor = options.tol + 4.0 * DBL_EPSILON * std::fabs(lg.log_modulus);
        report.statistic.push_back(delta);
        report.floor.push_back(floor);
        report.used.push_back(delta > floor);
    }

    std::vector<double> lx, ld;
    bool monotone = true;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        if (!report.used[i]) continue;
        if (!(report.statistic[i] < prev)) monotone = false;
        prev = report.statistic[i];
        lx.push_back(std::log(x_grid[i]));
        ld.push_back(std::log(report.statistic[i]));
    }

    if (lx.size() < 2) {
        report.status = ScanStatus::INCONCLUSIVE;
        report.worst = std::numeric_limits<double>::quiet_NaN();
        return report;
    }

    // least-squares slope of log Delta vs log x over resolvable points
    double mx = 0.0, md = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) { mx += lx[i]; md += ld[i]; }
    mx /= lx.size();
    md /= lx.size();
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        num += (lx[i] - mx) * (ld[i] - md);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    const double slope = num / den;
    report.slope = slope;
    report.worst = slope;
    report.status = (monotone && slope >= options.p) ? ScanStatus::PASS : ScanStatus::FAIL;
    return report;
}

CauchyResult cauchy_coefficient_detail(const CountParams& params, long n,
                                       const QuadratureSpec& quad, const CauchyOptions& options) {
    require_closed_product(params, "cauchy_coefficient");
    if (n < 1) throw std::domain_error("cauchy_coefficient: n must be >= 1");
    if (n > options.max_n)
        throw guard_error("cauchy_coefficient: n = " + std::to_string(n) + " exceeds guard (" +
                          std::to_string(options.max_n) + ")");

    const SaddleParams sp = saddle_params(params);
    const double x = std::pow(sp.kappa / n, 1.0 / (sp.alpha + 1.0));

    CauchyResult result;
    result.saddle_radius = x;
    result.log_peak = log_g(params, {x, 0.0}, options.log_g_tol).log_modulus + n * x;

    // peak width ~ x^{1+alpha/2} / sqrt(kappa (1+alpha))
    const double sigma = std::pow(x, 1.0 + sp.alpha / 2.0) / std::sqrt(sp.kappa * (1.0 + sp.alpha));
    std::vector<double> bounds = peak_panel_boundaries(std::min(sigma, M_PI / 4.0), M_PI);
    if (options.half_range)
        std::erase_if(bounds, [](double b) { return b < 0.0; });

    const double M = result.log_peak;
    const auto integrand = [&](double yy) {
        const ComplexEval lg = log_g(params, {x, yy}, options.log_g_tol);
        const std::complex<double> e(lg.log_modulus + n * x - M, lg.argument + n * yy);
        return std::exp(e);
    };

    const QuadResult qr = integrate_panels(integrand, std::move(bounds), quad, options.max_doublings);
    result.evaluations = qr.evaluations;
    result.quad_err = qr.err_estimate;
    if (!qr.converged)
        throw quadrature_error("cauchy_coefficient: quadrature did not converge (last delta " +
                                   std::to_string(qr.err_estimate) + ")",
                               qr.err_estimate);

    std::complex<double> I = qr.value;
    if (options.half_range) I = 2.0 * I.real();
    result.imag_ratio = std::abs(I.imag()) / std::max(std::abs(I), DBL_MIN);
    result.value = std::exp(M) * I.real() / (2.0 * M_PI);
    return result;
}

double cauchy_coefficient(const CountParams& params, long n, const QuadratureSpec& quad) {
    return cauchy_coefficient_detail(params, n, quad).value;
}

} // namespace powcount
