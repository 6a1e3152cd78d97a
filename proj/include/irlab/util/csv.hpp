#ifndef IRLAB_UTIL_CSV_HPP
#define IRLAB_UTIL_CSV_HPP

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "irlab/util/errors.hpp"

namespace irlab::util {

// Fixed 17-significant-digit decimal rendering: round-trips doubles exactly
// and is byte-stable across runs, which the output contract requires.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw ArgumentError("cannot open for writing: " + path);
    }

    void header(const std::string& line) { out_ << line << "\n"; }

    void row(const std::vector<double>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out_ << ",";
            out_ << format_double(values[i]);
        }
        out_ << "\n";
    }

    // Mixed row: leading string cells followed by numeric cells.
    void row(const std::vector<std::string>& cells, const std::vector<double>& values) {
        bool first = true;
        for (const auto& c : cells) {
            if (!first) out_ << ",";
            out_ << c;
            first = false;
        }
        for (double v : values) {
            if (!first) out_ << ",";
            out_ << format_double(v);
            first = false;
        }
        out_ << "\n";
    }

    void raw_line(const std::string& line) { out_ << line << "\n"; }

private:
    std::ofstream out_;
};

} // namespace irlab::util

#endif
