#include "powcount/oracle.hpp"

#include "powcount/errors.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace powcount {

namespace {

// j^r, or nullopt once the value exceeds limit (keeps everything in long
// without overflow).
std::optional<long> ipow_leq(long base, int exp, long limit) {
    long acc = 1;
    for (int i = 0; i < exp; ++i) {
        if (acc > limit / base) return std::nullopt;
        acc *= base;
    }
    return acc;
}

struct CountSearch {
    const CountParams& p;
    const OracleGuard& guard;
    std::uint64_t nodes = 0;

    void tick() {
        if (++nodes > guard.max_nodes)
            throw guard_error("count_bruteforce: node budget exceeded (" +
                              std::to_string(guard.max_nodes) +
                              "); too large for oracle");
    }

    // Sum over magnitude assignments to indices >= j of 2^{#nonzero}.
    BigInt go(long j, long rem) {
        tick();
        if (rem == 0) return 1; // all further k_j = 0
        const auto jr = ipow_leq(j, p.r, rem);
        if (!jr) return 0;
        BigInt total = go(j + 1, rem); // m_j = 0
        for (long m = 1;; ++m) {
            const auto mv = ipow_leq(m, p.v, rem / *jr);
            if (!mv || *jr * *mv > rem) break;
            total += 2 * go(j + 1, rem - *jr * *mv); // k_j = +-m
        }
        return total;
    }
};

struct EnumSearch {
    const CountParams& p;
    const OracleGuard& guard;
    std::uint64_t nodes = 0;
    std::vector<std::pair<long, long>> stack; // (j, m) with m > 0
    std::vector<SolutionVector> out;

    void tick() {
        if (++nodes > guard.max_nodes)
            throw guard_error("enumerate_solutions: node budget exceeded; too large for oracle");
    }

    void emit_signed(std::size_t idx, SolutionVector& sol) {
        if (idx == stack.size()) {
            if (out.size() >= guard.max_solutions)
                throw guard_error("enumerate_solutions: more than " +
                                  std::to_string(guard.max_solutions) +
                                  " solutions; too large for oracle");
            out.push_back(sol);
            return;
        }
        const auto [j, m] = stack[idx];
        for (long sign : {+1L, -1L}) {
            sol.entries.emplace_back(j, sign * m);
            emit_signed(idx + 1, sol);
            sol.entries.pop_back();
        }
    }

    void go(long j, long rem) {
        tick();
        if (rem == 0) {
            SolutionVector sol;
            emit_signed(0, sol);
            return;
        }
        const auto jr = ipow_leq(j, p.r, rem);
        if (!jr) return;
        go(j + 1, rem);
        for (long m = 1;; ++m) {
            const auto mv = ipow_leq(m, p.v, rem / *jr);
            if (!mv || *jr * *mv > rem) break;
            stack.emplace_back(j, m);
            go(j + 1, rem - *jr * *mv);
            stack.pop_back();
        }
    }
};

void check_target(const CountParams& params, long n, const OracleGuard& guard, const char* where) {
    params.validate();
    if (n < 0) throw std::domain_error(std::string(where) + ": n must be >= 0");
    if (n > guard.max_n)
        throw guard_error(std::string(where) + ": n = " + std::to_string(n) + " exceeds guard (" +
                          std::to_string(guard.max_n) + "); too large for oracle");
}

// Entry ordering: j ascending, then |k| ascending, then + before -.
bool entry_less(const std::pair<long, long>& a, const std::pair<long, long>& b) {
    if (a.first != b.first) return a.first < b.first;
    const long ma = std::abs(a.second), mb = std::abs(b.second);
    if (ma != mb) return ma < mb;
    return a.second > b.second; // positive first
}

} // namespace

BigInt count_bruteforce(const CountParams& params, long n, const OracleGuard& guard) {
    check_target(params, n, guard, "count_bruteforce");
    CountSearch search{params, guard};
    return search.go(1, n);
}

std::vector<SolutionVector> enumerate_solutions(const CountParams& params, long n,
                                                const OracleGuard& guard) {
    check_target(params, n, guard, "enumerate_solutions");
    EnumSearch search{params, guard};
    search.go(1, n);
    std::sort(search.out.begin(), search.out.end(),
              [](const SolutionVector& a, const SolutionVector& b) {
                  return std::lexicographical_compare(a.entries.begin(), a.entries.end(),
                                                      b.entries.begin(), b.entries.end(),
                                                      entry_less);
              });
    return search.out;
}

BigInt solution_weight(const CountParams& params, const SolutionVector& sol) {
    BigInt total = 0;
    for (const auto& [j, k] : sol.entries) {
        BigInt jr, mv;
        mpz_ui_pow_ui(jr.get_mpz_t(), static_cast<unsigned long>(j), params.r);
        mpz_ui_pow_ui(mv.get_mpz_t(), static_cast<unsigned long>(std::abs(k)), params.v);
        total += jr * mv;
    }
    return total;
}

} // namespace powcount
