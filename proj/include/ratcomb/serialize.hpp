#pragma once

#include <string>
#include <vector>

#include "ratcomb/series.hpp"

namespace ratcomb {

// On-disk form of an EgfSeries: UTF-8 JSON with fields kind/order/coeffs,
// rationals as exact "p/q" strings in lowest terms with positive
// denominators. Example:
//   {"coeffs":["0","1","-1","2"],"kind":"egf","order":3}
struct SeriesFile {
    std::string kind = "egf";
    std::size_t order = 0;
    std::vector<std::string> coeffs;
};

SeriesFile to_series_file(const EgfSeries& s);
// Validates the invariants (kind, length, canonical rational strings).
EgfSeries from_series_file(const SeriesFile& file);

std::string render_series_file(const SeriesFile& file);
SeriesFile parse_series_file(const std::string& text);

std::string read_text_file(const std::string& path);
EgfSeries load_series_file(const std::string& path);
void write_series_file(const std::string& path, const EgfSeries& s);

} // namespace ratcomb
