#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace fmom {

/// One sample of a price series. `index` is the 0-based sample ordinal in
/// file order; `timestamp` (epoch seconds) is carried as metadata only and
/// never affects the analysis.
struct price_point {
    std::size_t index = 0;
    std::optional<double> timestamp;
    double price = 0.0;
};

/// Uniformly sampled price series. Rows are treated as consecutive samples
/// one `sample_interval` apart; the interval is metadata, used only for the
/// resolution column of reports.
struct price_series {
    std::vector<price_point> points;
    double sample_interval = 5.0;

    std::size_t size() const noexcept { return points.size(); }
};

/// Signs of one-step returns, one value in {+1, -1, 0} per step.
/// Holds size() == source_length - 1 entries.
struct sign_sequence {
    std::vector<std::int8_t> signs;
    std::size_t source_length = 0;

    std::size_t size() const noexcept { return signs.size(); }
};

struct csv_options {
    char delimiter = ',';
    std::size_t price_column = 0;   // zero-indexed
    bool has_header = false;
    std::optional<std::size_t> timestamp_column;
};

/// Read a price series from a delimited text file. Every data row must carry
/// a strictly positive decimal in the selected column; failures report the
/// offending 1-based line number. Blank lines are skipped.
price_series parse_csv(const std::filesystem::path& path, const csv_options& opts = {});

/// Reduce a price series to one-step return signs:
/// +1 where y(t) > y(t-1), -1 where y(t) < y(t-1), 0 on exact ties.
/// Ties are counted in neither the positive nor the negative multiplicity
/// downstream.
sign_sequence compute_signs(const price_series& series);

}  // namespace fmom
