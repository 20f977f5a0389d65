#ifndef POWCOUNT_PARAMS_HPP
#define POWCOUNT_PARAMS_HPP

#include <stdexcept>
#include <string>

namespace powcount {

// Selects the counting family s_{r,v}(n): the number of integer vectors k
// (finitely many nonzero entries) with n = sum_j j^r * |k_j|^v.
struct CountParams {
    int r = 1; // power on the index j
    int v = 1; // power on |k_j|

    void validate() const {
        if (r < 1 || v < 1)
            throw std::domain_error("CountParams: r and v must be positive integers (got r=" +
                                    std::to_string(r) + ", v=" + std::to_string(v) + ")");
    }

    // The closed product identities (and hence the analytic machinery)
    // exist only for v = 1 and v = 2.
    bool has_closed_product() const { return v == 1 || v == 2; }
};

inline void require_closed_product(const CountParams& p, const char* where) {
    p.validate();
    if (!p.has_closed_product())
        throw std::domain_error(std::string(where) + ": only v in {1,2} is supported (got v=" +
                                std::to_string(p.v) + ")");
}

} // namespace powcount

#endif
