#pragma once

#include "fmom/series.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace fmom {

/// Event grid: disjoint consecutive windows of `window_len` samples starting
/// at `offset`, each split into `n_bins` equal sub-bins.
struct window_config {
    std::size_t window_len = 200;
    std::size_t offset = 0;
    std::size_t n_bins = 1;

    /// Throws std::invalid_argument unless window_len >= 1, n_bins >= 1 and
    /// n_bins divides window_len exactly.
    void validate() const;
};

/// Fixed-length, disjoint, consecutive windows ("events") cut from a sign
/// sequence. A trailing partial window is dropped, never padded.
class event_set {
public:
    event_set(const sign_sequence& signs, const window_config& cfg);

    std::size_t n_events() const noexcept { return n_events_; }
    std::size_t window_len() const noexcept { return window_len_; }
    std::size_t offset() const noexcept { return offset_; }

    std::span<const std::int8_t> event(std::size_t i) const;

private:
    std::vector<std::int8_t> data_;
    std::size_t window_len_ = 0;
    std::size_t offset_ = 0;
    std::size_t n_events_ = 0;
};

event_set partition(const sign_sequence& signs, const window_config& cfg);

/// Per-bin multiplicities of one event; ties (sign 0) count in neither.
struct bin_counts {
    std::vector<std::uint32_t> n_plus;
    std::vector<std::uint32_t> n_minus;
    std::size_t bin_size = 0;

    std::size_t n_bins() const noexcept { return n_plus.size(); }
};

/// Count positive and negative signs per bin; bin k covers samples
/// [k*bin_size, (k+1)*bin_size). n_bins must divide the event length.
bin_counts bin_multiplicities(std::span<const std::int8_t> event_signs, std::size_t n_bins);

}  // namespace fmom
