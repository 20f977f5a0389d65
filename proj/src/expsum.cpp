#include "powcount/expsum.hpp"

#include "powcount/errors.hpp"
#include "powcount/gfeval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

namespace powcount {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// n^r, throwing if it does not fit 127 bits.
u128 ipow128(long n, int r) {
    u128 acc = 1;
    const u128 cap = (u128(1) << 127);
    for (int i = 0; i < r; ++i) {
        if (acc > cap / static_cast<u128>(n))
            throw guard_error("weyl_sum: n^r exceeds 128-bit range (n=" + std::to_string(n) +
                              ", r=" + std::to_string(r) + "); reduce L or r");
        acc *= static_cast<u128>(n);
    }
    return acc;
}

// frac(m * |y|) in [0, 1) for m < 2^127, exactly (up to one long-double
// rounding): |y| = M * 2^{-k} with a 53-bit mantissa M, so
// frac = ((m*M) mod 2^k) * 2^{-k}, computed in 192-bit fixed point.
long double frac_fixed(u128 m, double ay) {
    int e2 = 0;
    const double f = std::frexp(ay, &e2); // ay = f * 2^e2, f in [0.5, 1)
    const u64 mant = static_cast<u64>(std::ldexp(f, 53)); // exact 53-bit integer
    const long k = 53 - e2;
    if (k <= 0) return 0.0L; // m * ay is an exact integer

    const u64 m_lo = static_cast<u64>(m);
    const u64 m_hi = static_cast<u64>(m >> 64);
    const u128 p0 = static_cast<u128>(m_lo) * mant;
    const u128 p1 = static_cast<u128>(m_hi) * mant;
    // P = p0 + (p1 << 64) as limbs l2:l1:l0 (exact, < 2^180)
    const u64 l0 = static_cast<u64>(p0);
    const u128 mid = (p0 >> 64) + static_cast<u128>(static_cast<u64>(p1));
    const u64 l1 = static_cast<u64>(mid);
    const u64 l2 = static_cast<u64>(mid >> 64) + static_cast<u64>(p1 >> 64);

    const auto mask = [](long bits) { return bits >= 64 ? ~u64(0) : ((u64(1) << bits) - 1); };
    u64 r0 = l0, r1 = 0, r2 = 0;
    if (k <= 64) {
        r0 = l0 & mask(k);
    } else if (k <= 128) {
        r1 = l1 & mask(k - 64);
    } else if (k <= 192) {
        r1 = l1;
        r2 = l2 & mask(k - 128);
    } else { // m*M < 2^192 <= 2^k: integer part is zero
        r1 = l1;
        r2 = l2;
    }
    if (k > 64) r0 = l0;
    const long double value = std::ldexp(static_cast<long double>(r2), 128) +
                              std::ldexp(static_cast<long double>(r1), 64) +
                              static_cast<long double>(r0);
    long double frac = std::ldexp(value, static_cast<int>(-std::min(k, 192L)));
    if (k > 192) frac = std::ldexp(frac, static_cast<int>(192 - k));
    if (frac >= 1.0L) frac -= 1.0L; // guard against rounding at the top
    return frac;
}

} // namespace

double weyl_phase_frac(int r, long n, double y) {
    if (y == 0.0) return 0.0;
    long double f = frac_fixed(ipow128(n, r), std::fabs(y));
    if (y < 0.0 && f != 0.0L) f = 1.0L - f;
    return static_cast<double>(f);
}

std::complex<double> weyl_sum(int r, double y, double L) {
    if (r < 1) throw std::domain_error("weyl_sum: r must be >= 1");
    if (!(L >= 1.0)) throw std::domain_error("weyl_sum: L must be >= 1");
    const long n_lo = static_cast<long>(std::floor(L)) + 1;
    const long n_hi = static_cast<long>(std::floor(2.0 * L));
    if (n_hi >= n_lo) ipow128(n_hi, r); // fail fast if the largest n^r overflows

    const double ay = std::fabs(y);
    double sum_re = 0.0, sum_im = 0.0, comp_re = 0.0, comp_im = 0.0;
    const auto kahan = [](double& sum, double& comp, double term) {
        const double t = term - comp;
        const double s = sum + t;
        comp = (s - sum) - t;
        sum = s;
    };
    for (long n = n_lo; n <= n_hi; ++n) {
        double re = 1.0, im = 0.0;
        if (y != 0.0) {
            long double f = frac_fixed(ipow128(n, r), ay);
            if (y < 0.0 && f != 0.0L) f = 1.0L - f;
            const double phase = static_cast<double>(2.0L * static_cast<long double>(M_PI) * f);
            re = std::cos(phase);
            im = std::sin(phase);
        }
        kahan(sum_re, comp_re, re);
        kahan(sum_im, comp_im, im);
    }
    return {sum_re, sum_im};
}

std::vector<std::pair<long, long>> farey_fractions(int max_h) {
    std::vector<std::pair<long, long>> out;
    for (long h = 2; h <= max_h; ++h)
        for (long d = 1; 2 * d <= h; ++d)
            if (std::gcd(d, h) == 1) out.emplace_back(d, h);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first * b.second < b.first * a.second;
    });
    return out;
}

ScanReport weyl_bound_scan(int r, double L, int y_samples, double delta) {
    if (r < 1) throw std::domain_error("weyl_bound_scan: r must be >= 1");
    if (!(L >= 2.0)) throw std::domain_error("weyl_bound_scan: L must be >= 2");
    if (y_samples < 1) throw std::domain_error("weyl_bound_scan: y_samples must be >= 1");

    const double lo = std::pow(L, -static_cast<double>(r));
    const double hi = 0.5;

    std::vector<double> ys;
    for (const auto& [d, h] : farey_fractions(10)) {
        const double y = static_cast<double>(d) / static_cast<double>(h);
        if (y > lo && y <= hi) ys.push_back(y);
    }
    for (int k = 1; k <= y_samples; ++k)
        ys.push_back(lo + (hi - lo) * static_cast<double>(k) / y_samples);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    ScanReport report;
    report.grid = ys;
    report.threshold = 1.0 - delta;
    double worst = 0.0;
    for (double y : ys) {
        const double stat = std::abs(weyl_sum(r, y, L)) / L;
        report.statistic.push_back(stat);
        worst = std::max(worst, stat);
    }
    report.worst = worst;
    report.status = (worst <= report.threshold) ? ScanStatus::PASS : ScanStatus::FAIL;
    char buf[96];
    std::snprintf(buf, sizeof buf, "weyl-bound r=%d L=%g empirical-delta=%.6f", r, L, 1.0 - worst);
    report.label = buf;
    return report;
}

ScanReport ratio_lowerbound_scan(const CountParams& params, const std::vector<double>& x_grid,
                                 int y_samples, double floor_c, double log_g_tol) {
    require_closed_product(params, "ratio_lowerbound_scan");
    if (x_grid.empty()) throw std::invalid_argument("ratio_lowerbound_scan: empty grid");
    if (y_samples < 1) throw std::domain_error("ratio_lowerbound_scan: y_samples must be >= 1");
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        if (!(x_grid[i] > 0.0) || !(x_grid[i] < M_PI))
            throw std::invalid_argument("ratio_lowerbound_scan: grid points must be in (0, pi)");
        if (i > 0 && !(x_grid[i] < x_grid[i - 1]))
            throw std::invalid_argument("ratio_lowerbound_scan: grid must decrease");
    }

    ScanReport report;
    report.label = "ratio-lowerbound r=" + std::to_string(params.r) + " v=" + std::to_string(params.v);
    report.grid = x_grid;
    report.threshold = floor_c;
    double worst = HUGE_VAL;
    for (double x : x_grid) {
        const double base = log_g(params, {x, 0.0}, log_g_tol).log_modulus;
        double min_diff = HUGE_VAL;
        for (int i = 0; i < y_samples; ++i) {
            const double y = (y_samples == 1)
                                 ? x
                                 : x + (M_PI - x) * static_cast<double>(i) / (y_samples - 1);
            const double diff = base - log_g(params, {x, y}, log_g_tol).log_modulus;
            min_diff = std::min(min_diff, diff);
        }
        const double stat = std::pow(x, 1.0 / params.r) * min_diff;
        report.statistic.push_back(stat);
        worst = std::min(worst, stat);
    }
    report.worst = worst;
    report.status = (worst >= floor_c) ? ScanStatus::PASS : ScanStatus::FAIL;
    return report;
}

} // namespace powcount
