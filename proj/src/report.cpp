#include "qdirac/report.hpp"

#include <cstdio>
#include <ctime>
#include <ostream>
#include <utility>

#include <json.hpp>

namespace qdirac {

void Report::add(std::string check, std::string anchor, double value, double threshold,
                 bool passed, bool gate) {
    rows.push_back({std::move(check), std::move(anchor), value, threshold, passed, gate});
}

void Report::add_max(std::string check, std::string anchor, double value, double threshold,
                     bool gate) {
    add(std::move(check), std::move(anchor), value, threshold, value <= threshold, gate);
}

void Report::add_min(std::string check, std::string anchor, double value, double threshold,
                     bool gate) {
    add(std::move(check), std::move(anchor), value, threshold, value >= threshold, gate);
}

bool Report::all_passed(bool strict) const {
    for (const CheckRow& r : rows) {
        if ((r.gate || strict) && !r.passed) return false;
    }
    return true;
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace {
const char* status_of(const CheckRow& r) {
    if (!r.gate) return r.passed ? "info" : "info-miss";
    return r.passed ? "pass" : "fail";
}
} // namespace

void Report::write_csv(std::ostream& out, const std::string& timestamp) const {
    out << "# scenario=" << scenario << " seed=" << seed << " generated=" << timestamp << "\n";
    out << "check,anchor,value,threshold,status\n";
    for (const CheckRow& r : rows) {
        out << r.check << ',' << r.anchor << ',' << format_value(r.value) << ','
            << format_value(r.threshold) << ',' << status_of(r) << "\n";
    }
}

void Report::write_json(std::ostream& out, const std::string& timestamp) const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["scenario"] = scenario;
    j["seed"] = seed;
    j["timestamp"] = timestamp;
    j["all_passed"] = all_passed();
    auto& checks = j["checks"] = nlohmann::ordered_json::array();
    for (const CheckRow& r : rows) {
        checks.push_back({{"check", r.check},
                          {"anchor", r.anchor},
                          {"value", format_value(r.value)},
                          {"threshold", format_value(r.threshold)},
                          {"status", status_of(r)}});
    }
    out << j.dump(2) << "\n";
}

} // namespace qdirac
