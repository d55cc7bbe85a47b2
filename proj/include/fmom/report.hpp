#pragma once

#include "fmom/moments.hpp"
#include "fmom/synth.hpp"
#include "fmom/uncertainty.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace fmom {

enum class output_format { csv, json };

/// Full configuration of one analyze run. Exactly one of `input` /
/// `generator` supplies the data.
struct run_config {
    std::optional<std::filesystem::path> input;
    std::optional<generator_spec> generator;
    csv_options csv;
    double sample_interval = 5.0;  // time units per sample; resolution column only
    std::size_t window_len = 200;
    std::vector<std::size_t> bins_list = {1, 2, 4, 10, 20};
    std::vector<sign_mode> modes = {sign_mode::pp, sign_mode::mm, sign_mode::pm};
    unsigned order = 2;
    std::size_t n_resamples = 1000;
    std::optional<std::vector<std::size_t>> offsets;  // default {0, w/4, w/2}
    std::uint64_t seed = 1;
    output_format format = output_format::csv;
    std::optional<std::filesystem::path> output;  // default stdout

    /// Rejects invalid combinations before any computation.
    void validate() const;
};

/// One record per (mode, n_bins).
struct report_row {
    sign_mode mode = sign_mode::pp;
    unsigned order = 2;
    std::size_t n_bins = 1;
    double resolution = 0.0;  // window_len * sample_interval / n_bins
    double f = 0.0;
    double stat_err = 0.0;
    double syst_err = 0.0;
    std::size_t n_events = 0;
    double log_f = 0.0;
};

/// Ingest (or generate), partition, scan moments and attach uncertainties.
/// Rows come back grouped by mode in the requested order, bins ascending.
std::vector<report_row> run_analyze(const run_config& cfg);

/// Column set and ordering are fixed:
/// mode,q,n_bins,resolution,F,stat_err,syst_err,n_events,log_F.
/// CSV carries a leading `# seed=...` comment line; JSON carries a top-level
/// "seed" field. Values print with fixed 12 decimals in CSV and full
/// round-trip precision in JSON.
void write_report_csv(std::ostream& os, std::span<const report_row> rows, std::uint64_t seed);
void write_report_json(std::ostream& os, std::span<const report_row> rows, std::uint64_t seed);

/// Write rows per cfg.format to cfg.output (stdout when unset).
void write_report(const run_config& cfg, std::span<const report_row> rows);

/// Write a synthetic series as a CSV price file readable by analyze: the
/// walk itself for gaussian-walk, otherwise a cumulative-sum price proxy
/// (y0 = length + 1, one unit step per sign) that re-ingests to the exact
/// generated sign sequence.
void run_generate(const generator_spec& spec, const std::filesystem::path& out);

}  // namespace fmom
