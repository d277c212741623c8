#pragma once

#include <string>
#include <vector>

namespace sqrac::tables {

enum class Status { pass, fail, info, excluded };

struct Cell {
    std::string table;    // "I" .. "VIII"
    double theta_deg;     // row key
    std::string quantity; // column name
    double computed;
    double reference;
    double tolerance; // 0 for informational cells
    Status status;
};

const char* status_name(Status s);

/// Recomputes one reference table and compares cell by cell. Gated cells
/// carry the acceptance tolerance and a pass/fail status; cells without a
/// mandated tolerance are informational; rows documented as data anomalies
/// are marked excluded. Throws std::invalid_argument for unknown names.
std::vector<Cell> compare_table(const std::string& which);

std::vector<Cell> compare_all();

} // namespace sqrac::tables
