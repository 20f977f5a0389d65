#ifndef POWCOUNT_SERIES_HPP
#define POWCOUNT_SERIES_HPP

#include "powcount/bigint.hpp"
#include "powcount/params.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace powcount {

enum class SeriesMethod { direct_product, prop1_v1, prop1_v2 };

const char* method_name(SeriesMethod m);

// Exact coefficients s_{r,v}(0..upto) of the generating function
// G_{r,v}(q) = prod_j sum_{k in Z} q^{j^r |k|^v}, with provenance.
struct CoeffTable {
    CountParams params;
    long upto = 0;
    std::vector<BigInt> coeffs; // size upto+1, all >= 0, coeffs[0] = 1
    SeriesMethod method = SeriesMethod::direct_product;
};

struct SeriesGuard {
    long max_upto = 200000;
};

// The j-th factor sum_{k in Z} q^{j^r |k|^v} truncated at degree N, as sparse
// (exponent, coefficient) pairs: {0:1} plus {j^r m^v : 2} for m >= 1.
std::vector<std::pair<long, long>> theta_factor(const CountParams& params, long j, long upto);

// Multiplies theta factors over all j with j^r <= upto, truncating every
// intermediate product at degree upto. Works for every v >= 1.
CoeffTable coeffs_direct(const CountParams& params, long upto, const SeriesGuard& guard = {});

// v = 1 closed product: prod_{n^r <= upto} (1+q^{n^r})/(1-q^{n^r}).
CoeffTable coeffs_prop1_v1(int r, long upto, const SeriesGuard& guard = {});

// v = 2 closed double product: prod over n*j^r <= upto of
// (1-(-1)^n q^{n j^r})/(1+(-1)^n q^{n j^r}). Intermediates are signed; the
// final table is checked nonnegative (consistency_error otherwise).
CoeffTable coeffs_prop1_v2(int r, long upto, const SeriesGuard& guard = {});

// CSV columns: n,s with exact decimal strings.
void write_csv(const CoeffTable& table, std::ostream& out);

// {"params":{"r":..,"v":..},"upto":..,"method":..,"coeffs":["1","2",...]}
nlohmann::ordered_json to_json(const CoeffTable& table);

} // namespace powcount

#endif
