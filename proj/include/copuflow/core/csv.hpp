#ifndef COPUFLOW_CORE_CSV_HPP
#define COPUFLOW_CORE_CSV_HPP

#include <Eigen/Dense>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "copuflow/errors.hpp"

namespace copuflow {

/// Read a numeric CSV into a matrix. One row per observation, comma separated.
/// When `header` is true the first line is skipped.
inline Eigen::MatrixXd read_csv(const std::string& path, bool header = false) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open CSV file: " + path);

    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 && header) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t end = line.find(',', start);
            if (end == std::string::npos) end = line.size();
            const char* b = line.data() + start;
            const char* e = line.data() + end;
            while (b < e && (*b == ' ' || *b == '\t')) ++b;
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(b, e, v);
            while (ptr < e && (*ptr == ' ' || *ptr == '\t')) ++ptr;
            if (ec != std::errc{} || ptr != e)
                throw FormatError(path + ":" + std::to_string(lineno) +
                                  ": cannot parse field '" +
                                  std::string(line.substr(start, end - start)) + "'");
            row.push_back(v);
            start = end + 1;
            if (end == line.size()) break;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw FormatError(path + ":" + std::to_string(lineno) +
                              ": ragged row (" + std::to_string(row.size()) +
                              " fields, expected " +
                              std::to_string(rows.front().size()) + ")");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw FormatError(path + ": no data rows");

    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows.front().size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

inline void write_csv(const std::string& path, const Eigen::MatrixXd& m,
                      const std::vector<std::string>& header = {}) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open CSV file for writing: " + path);
    out.precision(17);
    if (!header.empty()) {
        for (std::size_t j = 0; j < header.size(); ++j)
            out << (j ? "," : "") << header[j];
        out << '\n';
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out << (j ? "," : "") << m(i, j);
        out << '\n';
    }
    if (!out) throw ConfigError("write failed: " + path);
}

}  // namespace copuflow

#endif
