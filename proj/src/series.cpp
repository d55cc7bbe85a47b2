#include "fmom/series.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fmom {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail_row(const std::filesystem::path& path, std::size_t line_no,
                           const std::string& what) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

// Full-field decimal parse; rejects trailing garbage.
double parse_field(std::string_view field, const std::filesystem::path& path,
                   std::size_t line_no, const char* what) {
    const std::string_view f = trim(field);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
    if (f.empty() || ec != std::errc{} || ptr != f.data() + f.size() || !std::isfinite(value))
        fail_row(path, line_no, std::string("cannot parse ") + what + " \"" + std::string(field) + "\"");
    return value;
}

std::string_view nth_field(std::string_view line, char delim, std::size_t column,
                           const std::filesystem::path& path, std::size_t line_no) {
    std::size_t begin = 0;
    for (std::size_t col = 0;; ++col) {
        const std::size_t end = line.find(delim, begin);
        if (col == column) return line.substr(begin, end == std::string_view::npos ? end : end - begin);
        if (end == std::string_view::npos)
            fail_row(path, line_no, "missing column " + std::to_string(column));
        begin = end + 1;
    }
}

}  // namespace

price_series parse_csv(const std::filesystem::path& path, const csv_options& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    price_series series;
    std::string line;
    std::size_t line_no = 0;
    bool header_pending = opts.has_header;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        const double price = parse_field(nth_field(line, opts.delimiter, opts.price_column,
                                                   path, line_no),
                                         path, line_no, "price");
        if (price <= 0.0) fail_row(path, line_no, "non-positive price " + std::to_string(price));
        std::optional<double> ts;
        if (opts.timestamp_column)
            ts = parse_field(nth_field(line, opts.delimiter, *opts.timestamp_column, path, line_no),
                             path, line_no, "timestamp");
        series.points.push_back({series.points.size(), ts, price});
    }
    if (series.points.empty()) throw std::runtime_error("empty input: " + path.string());
    return series;
}

sign_sequence compute_signs(const price_series& series) {
    if (series.size() < 2)
        throw std::invalid_argument("price series shorter than 2 samples");
    sign_sequence out;
    out.source_length = series.size();
    out.signs.reserve(series.size() - 1);
    for (std::size_t t = 1; t < series.size(); ++t) {
        const double d = series.points[t].price - series.points[t - 1].price;
        out.signs.push_back(d > 0.0 ? std::int8_t{1} : d < 0.0 ? std::int8_t{-1} : std::int8_t{0});
    }
    return out;
}

}  // namespace fmom
