#ifndef POWCOUNT_ORACLE_HPP
#define POWCOUNT_ORACLE_HPP

#include "powcount/bigint.hpp"
#include "powcount/params.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace powcount {

// Ground-truth brute-force counting of solutions of
//   n = sum_j j^r * |k_j|^v,  k in Z^infinity with finite support,
// for any positive v. Exponential-time by design; guarded, never truncated.

// One solution vector: (j, k_j) pairs with k_j != 0, sorted by j.
struct SolutionVector {
    std::vector<std::pair<long, long>> entries;

    bool operator==(const SolutionVector&) const = default;
};

struct OracleGuard {
    long max_n = 10000;                      // hard cap on the target
    std::uint64_t max_nodes = 100'000'000;   // search-tree budget (so the
                                             // enumeration provably stops)
    std::uint64_t max_solutions = 1'000'000; // for enumerate_solutions only
};

// s_{r,v}(n), counting signed vectors: each nonnegative-magnitude solution
// with m nonzero entries contributes 2^m. Throws guard_error when a budget
// is exceeded.
BigInt count_bruteforce(const CountParams& params, long n, const OracleGuard& guard = {});

// All solutions, deterministically ordered: entry key is (j, |k|, sign with
// + before -), solutions compared lexicographically by their entry lists.
std::vector<SolutionVector> enumerate_solutions(const CountParams& params, long n,
                                                const OracleGuard& guard = {});

// sum_j j^r * |k_j|^v of a solution vector (test aid).
BigInt solution_weight(const CountParams& params, const SolutionVector& sol);

} // namespace powcount

#endif
