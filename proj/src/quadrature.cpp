#include "powcount/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace powcount {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; the rule
// is symmetric).
constexpr double kGLNode[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499,
};
constexpr double kGLWeight[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541,
};

std::complex<double> gl16(const ComplexIntegrand& f, double a, double b, int& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::complex<long double> acc = 0.0L;
    for (int i = 0; i < 8; ++i) {
        const std::complex<double> lo = f(mid - half * kGLNode[i]);
        const std::complex<double> hi = f(mid + half * kGLNode[i]);
        acc += static_cast<long double>(kGLWeight[i]) *
               (std::complex<long double>(lo) + std::complex<long double>(hi));
        evals += 2;
    }
    return std::complex<double>(acc) * half;
}

// Fixed-depth tanh-sinh rule on one panel. Level 5 (h = 2^-5) with the
// standard double-exponential abscissas; plenty for smooth integrands and
// robust for endpoint singularities.
std::complex<double> tanh_sinh(const ComplexIntegrand& f, double a, double b, int& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double h = 1.0 / 32.0;
    std::complex<long double> acc = 0.0L;
    for (int k = -220; k <= 220; ++k) {
        const double t = k * h;
        const double sh = 0.5 * M_PI * std::sinh(t);
        const double x = std::tanh(sh);
        const double w = 0.5 * M_PI * std::cosh(t) / std::pow(std::cosh(sh), 2);
        if (w < 1e-20) continue;
        if (1.0 - std::fabs(x) <= 0.0) continue;
        acc += static_cast<long double>(w) * std::complex<long double>(f(mid + half * x));
        ++evals;
    }
    return std::complex<double>(acc) * (half * h);
}

} // namespace

QuadResult integrate_panels(const ComplexIntegrand& f, std::vector<double> boundaries,
                            const QuadratureSpec& spec, int max_doublings) {
    if (boundaries.size() < 2)
        throw std::invalid_argument("integrate_panels: need at least one panel");
    std::sort(boundaries.begin(), boundaries.end());

    // apply requested initial refinement
    for (int d = 1; d < spec.panels; d *= 2) {
        std::vector<double> refined;
        refined.reserve(boundaries.size() * 2);
        for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
            refined.push_back(boundaries[i]);
            refined.push_back(0.5 * (boundaries[i] + boundaries[i + 1]));
        }
        refined.push_back(boundaries.back());
        boundaries = std::move(refined);
    }

    QuadResult res;
    std::complex<double> prev = 0.0;
    for (int pass = 0; pass <= max_doublings; ++pass) {
        std::complex<long double> total = 0.0L;
        for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
            const auto piece = (spec.rule == QuadRule::gauss_legendre)
                                   ? gl16(f, boundaries[i], boundaries[i + 1], res.evaluations)
                                   : tanh_sinh(f, boundaries[i], boundaries[i + 1], res.evaluations);
            total += std::complex<long double>(piece);
        }
        res.value = std::complex<double>(total);
        if (pass > 0) {
            res.err_estimate = std::abs(res.value - prev);
            if (res.err_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(res.value))) {
                res.converged = true;
                return res;
            }
        }
        prev = res.value;
        if (pass == max_doublings) break;
        std::vector<double> refined;
        refined.reserve(boundaries.size() * 2);
        for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
            refined.push_back(boundaries[i]);
            refined.push_back(0.5 * (boundaries[i] + boundaries[i + 1]));
        }
        refined.push_back(boundaries.back());
        boundaries = std::move(refined);
    }
    return res; // converged == false
}

std::vector<double> peak_panel_boundaries(double half_width, double limit) {
    if (!(half_width > 0.0) || !(limit > 0.0))
        throw std::invalid_argument("peak_panel_boundaries: widths must be positive");
    half_width = std::min(half_width, limit);
    std::vector<double> pos{0.0};
    for (double w = half_width; w < limit; w *= 2.0) pos.push_back(w);
    pos.push_back(limit);
    std::vector<double> out;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it)
        if (*it > 0.0) out.push_back(-*it);
    out.insert(out.end(), pos.begin(), pos.end());
    return out;
}

} // namespace powcount
