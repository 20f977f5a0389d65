#include "powcount/series.hpp"

#include "powcount/errors.hpp"

#include <ostream>

namespace powcount {

namespace {

void check_upto(long upto, const SeriesGuard& guard, const char* where) {
    if (upto < 0) throw std::domain_error(std::string(where) + ": upto must be >= 0");
    if (upto > guard.max_upto)
        throw guard_error(std::string(where) + ": upto = " + std::to_string(upto) +
                          " exceeds resource guard (" + std::to_string(guard.max_upto) + ")");
}

// c *= (1 + q^a), truncated at degree N: descending so c[i-a] is still old.
void mul_one_plus(std::vector<BigInt>& c, long a) {
    const long n = static_cast<long>(c.size()) - 1;
    for (long i = n; i >= a; --i)
        mpz_add(c[i].get_mpz_t(), c[i].get_mpz_t(), c[i - a].get_mpz_t());
}

// c *= (1 - q^a)
void mul_one_minus(std::vector<BigInt>& c, long a) {
    const long n = static_cast<long>(c.size()) - 1;
    for (long i = n; i >= a; --i)
        mpz_sub(c[i].get_mpz_t(), c[i].get_mpz_t(), c[i - a].get_mpz_t());
}

// c *= (1 - q^a)^{-1} = 1 + q^a + q^{2a} + ...: ascending prefix recurrence,
// d[i] = c[i] + d[i-a].
void div_one_minus(std::vector<BigInt>& c, long a) {
    const long n = static_cast<long>(c.size()) - 1;
    for (long i = a; i <= n; ++i)
        mpz_add(c[i].get_mpz_t(), c[i].get_mpz_t(), c[i - a].get_mpz_t());
}

// c *= (1 + q^a)^{-1}: d[i] = c[i] - d[i-a].
void div_one_plus(std::vector<BigInt>& c, long a) {
    const long n = static_cast<long>(c.size()) - 1;
    for (long i = a; i <= n; ++i)
        mpz_sub(c[i].get_mpz_t(), c[i].get_mpz_t(), c[i - a].get_mpz_t());
}

// base^exp for base >= 1, without overflow; 0 means "exceeds limit".
long ipow_capped(long base, int exp, long limit) {
    long acc = 1;
    for (int i = 0; i < exp; ++i) {
        if (acc > limit / base) return 0;
        acc *= base;
    }
    return acc;
}

} // namespace

const char* method_name(SeriesMethod m) {
    switch (m) {
        case SeriesMethod::direct_product: return "direct-product";
        case SeriesMethod::prop1_v1: return "prop1-v1";
        case SeriesMethod::prop1_v2: return "prop1-v2";
    }
    return "?";
}

std::vector<std::pair<long, long>> theta_factor(const CountParams& params, long j, long upto) {
    params.validate();
    if (j < 1) throw std::domain_error("theta_factor: j must be >= 1");
    if (upto < 0) throw std::domain_error("theta_factor: upto must be >= 0");
    std::vector<std::pair<long, long>> factor{{0, 1}};
    const long jr = ipow_capped(j, params.r, upto);
    if (jr == 0) return factor;
    for (long m = 1;; ++m) {
        const long mv = ipow_capped(m, params.v, upto / jr);
        if (mv == 0 || jr * mv > upto) break;
        factor.emplace_back(jr * mv, 2);
    }
    return factor;
}

CoeffTable coeffs_direct(const CountParams& params, long upto, const SeriesGuard& guard) {
    params.validate();
    check_upto(upto, guard, "coeffs_direct");
    std::vector<BigInt> c(upto + 1, 0);
    c[0] = 1;
    for (long j = 1;; ++j) {
        if (ipow_capped(j, params.r, upto) == 0) break;
        const auto factor = theta_factor(params, j, upto);
        if (factor.size() == 1) continue;
        // factor has constant term 1, so multiply in place, descending.
        for (long i = upto; i >= 1; --i) {
            for (std::size_t t = 1; t < factor.size(); ++t) {
                const auto [e, a] = factor[t];
                if (e > i) break;
                mpz_addmul_ui(c[i].get_mpz_t(), c[i - e].get_mpz_t(),
                              static_cast<unsigned long>(a));
            }
        }
    }
    return CoeffTable{params, upto, std::move(c), SeriesMethod::direct_product};
}

CoeffTable coeffs_prop1_v1(int r, long upto, const SeriesGuard& guard) {
    CountParams params{r, 1};
    params.validate();
    check_upto(upto, guard, "coeffs_prop1_v1");
    std::vector<BigInt> c(upto + 1, 0);
    c[0] = 1;
    for (long n = 1;; ++n) {
        const long a = ipow_capped(n, r, upto);
        if (a == 0) break;
        mul_one_plus(c, a);
        div_one_minus(c, a);
    }
    return CoeffTable{params, upto, std::move(c), SeriesMethod::prop1_v1};
}

CoeffTable coeffs_prop1_v2(int r, long upto, const SeriesGuard& guard) {
    CountParams params{r, 2};
    params.validate();
    check_upto(upto, guard, "coeffs_prop1_v2");
    std::vector<BigInt> c(upto + 1, 0);
    c[0] = 1;
    for (long j = 1;; ++j) {
        const long jr = ipow_capped(j, r, upto);
        if (jr == 0) break;
        for (long n = 1; n * jr <= upto; ++n) {
            const long a = n * jr;
            if (n % 2 == 1) { // (1+q^a)/(1-q^a)
                mul_one_plus(c, a);
                div_one_minus(c, a);
            } else { // (1-q^a)/(1+q^a)
                mul_one_minus(c, a);
                div_one_plus(c, a);
            }
        }
    }
    for (long i = 0; i <= upto; ++i)
        if (c[i] < 0)
            throw consistency_error("coeffs_prop1_v2: negative coefficient at n=" +
                                    std::to_string(i) + " (internal inconsistency)");
    return CoeffTable{params, upto, std::move(c), SeriesMethod::prop1_v2};
}

void write_csv(const CoeffTable& table, std::ostream& out) {
    out << "n,s\n";
    for (long n = 0; n <= table.upto; ++n)
        out << n << ',' << to_decimal(table.coeffs[n]) << '\n';
}

nlohmann::ordered_json to_json(const CoeffTable& table) {
    nlohmann::ordered_json j;
    j["params"] = {{"r", table.params.r}, {"v", table.params.v}};
    j["upto"] = table.upto;
    j["method"] = method_name(table.method);
    auto& arr = j["coeffs"] = nlohmann::ordered_json::array();
    for (long n = 0; n <= table.upto; ++n) arr.push_back(to_decimal(table.coeffs[n]));
    return j;
}

} // namespace powcount
