#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "urnlab/errors.hpp"
#include "urnlab/trajectory.hpp"

namespace urnlab {

// Trajectory CSV: header `replica,n,U_0..U_{k-1},N_0..N_{k-1}`, one row per
// (replica, checkpoint), floats with 17 significant digits so round-trips
// are bit-exact.

inline std::string trajectory_csv_header(int k) {
    std::string h = "replica,n";
    for (int j = 0; j < k; ++j) h += ",U_" + std::to_string(j);
    for (int j = 0; j < k; ++j) h += ",N_" + std::to_string(j);
    return h;
}

inline void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryRecord>& recs,
                                 int k) {
    os << trajectory_csv_header(k) << '\n';
    char buf[64];
    for (const TrajectoryRecord& rec : recs) {
        for (const Snapshot& cp : rec.checkpoints) {
            os << rec.replica_index << ',' << cp.n;
            for (int j = 0; j < k; ++j) {
                std::snprintf(buf, sizeof(buf), "%.17g", cp.u[static_cast<std::size_t>(j)]);
                os << ',' << buf;
            }
            for (int j = 0; j < k; ++j) os << ',' << cp.counts[static_cast<std::size_t>(j)];
            os << '\n';
        }
    }
}

struct CsvRow {
    std::uint64_t replica = 0;
    std::int64_t n = 0;
    Vec u;
    std::vector<std::int64_t> counts;
};

inline std::vector<CsvRow> read_trajectory_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) raise(Err::IoError, "empty trajectory CSV");
    if (line.rfind("replica,n", 0) != 0) raise(Err::IoError, "bad trajectory CSV header");
    int k = 0;
    for (std::size_t pos = 0; (pos = line.find(",U_", pos)) != std::string::npos; ++pos) ++k;
    if (k == 0) raise(Err::IoError, "trajectory CSV header has no U columns");

    std::vector<CsvRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        CsvRow row;
        auto next = [&]() -> std::string {
            if (!std::getline(ss, cell, ',')) raise(Err::IoError, "short CSV row");
            return cell;
        };
        row.replica = std::stoull(next());
        row.n = std::stoll(next());
        row.u.resize(k);
        for (int j = 0; j < k; ++j) row.u[j] = std::stod(next());
        row.counts.resize(k);
        for (int j = 0; j < k; ++j) row.counts[j] = std::stoll(next());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace urnlab
