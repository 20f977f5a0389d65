#ifndef POWCOUNT_SCAN_REPORT_HPP
#define POWCOUNT_SCAN_REPORT_HPP

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace powcount {

enum class ScanStatus { PASS, FAIL, INCONCLUSIVE };

const char* status_name(ScanStatus s);

// Structured result of a numeric bound check over a grid of sample points.
// `worst` is the extremal decision statistic and `status` is PASS iff it
// lies on the correct side of `threshold` (direction documented per scan).
// For the residual scan the decision statistic is the fitted log-log slope;
// per-point residuals live in `statistic`, and `floor`/`used` record which
// points were resolvable above the arithmetic's measurement floor.
struct ScanReport {
    std::string label;
    std::vector<double> grid;
    std::vector<double> statistic;
    double worst = 0.0;
    double threshold = 0.0;
    std::optional<double> slope; // residual scans only
    ScanStatus status = ScanStatus::INCONCLUSIVE;

    std::vector<double> floor; // optional per-point measurement floor
    std::vector<bool> used;    // optional per-point resolvability flags
};

// {"label":..,"grid":[..],"residuals":[..],"worst":..,"threshold":..,
//  "slope":..|null,"status":"PASS", ["floor":[..],"used":[..]]}
nlohmann::ordered_json to_json(const ScanReport& report);

// CSV columns: point,statistic
void write_csv(const ScanReport& report, std::ostream& out);

} // namespace powcount

#endif
