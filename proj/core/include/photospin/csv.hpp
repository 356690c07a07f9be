#pragma once

#include <string>
#include <vector>

namespace photospin {

/// Deterministic number formatting used throughout the output layer:
/// %.10g for data cells, so identical runs produce identical bytes.
std::string fmt(double v);
std::string fmt(std::int64_t v);

/// CSV with '#'-prefixed header comments, one column-name row, LF endings.
struct CsvDocument {
    std::vector<std::string> header_comments; // written as "# <line>"
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const;
    void write(const std::string& path) const;
};

} // namespace photospin
