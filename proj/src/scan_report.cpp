#include "powcount/scan_report.hpp"

#include <cstdio>
#include <ostream>

namespace powcount {

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

const char* status_name(ScanStatus s) {
    switch (s) {
        case ScanStatus::PASS: return "PASS";
        case ScanStatus::FAIL: return "FAIL";
        case ScanStatus::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

nlohmann::ordered_json to_json(const ScanReport& report) {
    nlohmann::ordered_json j;
    j["label"] = report.label;
    j["grid"] = report.grid;
    j["residuals"] = report.statistic;
    j["worst"] = report.worst;
    j["threshold"] = report.threshold;
    if (report.slope)
        j["slope"] = *report.slope;
    else
        j["slope"] = nullptr;
    j["status"] = status_name(report.status);
    if (!report.floor.empty()) j["floor"] = report.floor;
    if (!report.used.empty()) {
        auto& arr = j["used"] = nlohmann::ordered_json::array();
        for (bool u : report.used) arr.push_back(u);
    }
    return j;
}

void write_csv(const ScanReport& report, std::ostream& out) {
    out << "point,statistic\n";
    for (std::size_t i = 0; i < report.grid.size(); ++i)
        out << fmt17(report.grid[i]) << ',' << fmt17(report.statistic[i]) << '\n';
}

} // namespace powcount
