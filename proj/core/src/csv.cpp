#include "photospin/csv.hpp"

#include <cstdio>
#include <fstream>

#include "photospin/errors.hpp"

namespace photospin {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string fmt(std::int64_t v) { return std::to_string(v); }

std::string CsvDocument::to_string() const {
    std::string out;
    for (const auto& c : header_comments) {
        out += "# " + c + "\n";
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ",";
        out += columns[i];
    }
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += row[i];
        }
        out += "\n";
    }
    return out;
}

void CsvDocument::write(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open output file '" + path + "'");
    const std::string body = to_string();
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!f) throw IoError("failed writing output file '" + path + "'");
}

} // namespace photospin
