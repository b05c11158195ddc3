#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qdirac {

/// One measured property. `gate` rows decide the exit status; informational
/// rows are recorded (and only enforced under --strict).
struct CheckRow {
    std::string check;  // scenario-local name of the measurement
    std::string anchor; // stable id of the property being checked
    double value = 0.0;
    double threshold = 0.0;
    bool passed = false;
    bool gate = true;
};

struct Report {
    std::string scenario;
    std::uint64_t seed = 0;
    std::vector<CheckRow> rows;

    void add(std::string check, std::string anchor, double value, double threshold, bool passed,
             bool gate = true);

    // value <= threshold gates.
    void add_max(std::string check, std::string anchor, double value, double threshold,
                 bool gate = true);
    // value >= threshold gates.
    void add_min(std::string check, std::string anchor, double value, double threshold,
                 bool gate = true);

    bool all_passed(bool strict = false) const;

    // CSV: one comment line with the timestamp, a header, then one line per
    // row with columns check, anchor, value, threshold, status. Identical
    // inputs give identical bytes apart from the timestamp line.
    void write_csv(std::ostream& out, const std::string& timestamp) const;

    // JSON summary mirroring the CSV plus scenario metadata; the timestamp
    // sits on its own line.
    void write_json(std::ostream& out, const std::string& timestamp) const;
};

// "YYYY-MM-DDTHH:MM:SSZ" (UTC).
std::string utc_timestamp();

// Fixed-width scientific formatting used everywhere a report prints a
// number, so identical runs produce identical bytes.
std::string format_value(double v);

} // namespace qdirac
