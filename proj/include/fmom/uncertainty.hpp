#pragma once

#include "fmom/moments.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace fmom {

struct uncertainty_report {
    double stat_err = 0.0;
    double syst_err = 0.0;
    std::size_t n_resamples = 0;
    std::vector<std::size_t> offsets_used;
    std::uint64_t seed = 0;
};

/// Derive an independent stream seed from a base seed and a stream id
/// (splitmix64 finalizer over seed + golden-ratio increment * (stream + 1)).
/// This is the stream-splitting rule used everywhere a run fans out into
/// several seeded computations.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

/// Standard error of the moment by nonparametric bootstrap over events.
///
/// Convention: events are addressed by ordinal 0..n_events-1. One mt19937_64
/// seeded with `seed` supplies all draws; resample r consumes draws
/// [r*n_events, (r+1)*n_events), each mapped to an ordinal by modulo.
/// Identical (events, est, n_resamples, seed) give identical results.
/// Requires n_events >= 2 and n_resamples >= 100.
double bootstrap_stat(const event_set& events, const estimator_spec& est,
                      std::size_t n_resamples, std::uint64_t seed);

/// {0, window_len/4, window_len/2}, duplicates removed.
std::vector<std::size_t> default_offsets(std::size_t window_len);

/// Recompute the moment with the event grid shifted by each offset and
/// return half the spread, (max - min) / 2. Every offset must leave at
/// least one full window.
double systematic_offset_scan(const sign_sequence& signs, const window_config& cfg,
                              const estimator_spec& est,
                              std::span<const std::size_t> offsets);

/// Both uncertainties of one estimator in a single report. The bootstrap
/// runs on the offset-0 event grid; the offset scan covers `offsets`.
uncertainty_report estimate_uncertainty(const sign_sequence& signs, const window_config& cfg,
                                        const estimator_spec& est, std::size_t n_resamples,
                                        std::uint64_t seed,
                                        std::span<const std::size_t> offsets);

}  // namespace fmom
