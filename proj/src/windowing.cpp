#include "fmom/windowing.hpp"

#include <stdexcept>
#include <string>

namespace fmom {

void window_config::validate() const {
    if (window_len < 1) throw std::invalid_argument("window_len must be >= 1");
    if (n_bins < 1) throw std::invalid_argument("n_bins must be >= 1");
    if (window_len % n_bins != 0)
        throw std::invalid_argument("n_bins must divide window_len (" + std::to_string(n_bins) +
                                    " does not divide " + std::to_string(window_len) + ")");
}

event_set::event_set(const sign_sequence& signs, const window_config& cfg)
    : window_len_(cfg.window_len), offset_(cfg.offset) {
    cfg.validate();
    const std::size_t avail = signs.size() > cfg.offset ? signs.size() - cfg.offset : 0;
    n_events_ = avail / cfg.window_len;
    if (n_events_ == 0)
        throw std::invalid_argument("fewer than one full window: " + std::to_string(signs.size()) +
                                    " samples, offset " + std::to_string(cfg.offset) +
                                    ", window_len " + std::to_string(cfg.window_len));
    const auto first = signs.signs.begin() + static_cast<std::ptrdiff_t>(cfg.offset);
    data_.assign(first, first + static_cast<std::ptrdiff_t>(n_events_ * window_len_));
}

std::span<const std::int8_t> event_set::event(std::size_t i) const {
    if (i >= n_events_) throw std::out_of_range("event index " + std::to_string(i));
    return {data_.data() + i * window_len_, window_len_};
}

event_set partition(const sign_sequence& signs, const window_config& cfg) {
    return event_set(signs, cfg);
}

bin_counts bin_multiplicities(std::span<const std::int8_t> event_signs, std::size_t n_bins) {
    if (n_bins < 1 || event_signs.size() % n_bins != 0)
        throw std::invalid_argument("n_bins must divide window_len (" + std::to_string(n_bins) +
                                    " does not divide " + std::to_string(event_signs.size()) + ")");
    bin_counts counts;
    counts.bin_size = event_signs.size() / n_bins;
    counts.n_plus.assign(n_bins, 0);
    counts.n_minus.assign(n_bins, 0);
    for (std::size_t t = 0; t < event_signs.size(); ++t) {
        const std::size_t k = t / counts.bin_size;
        if (event_signs[t] > 0)
            ++counts.n_plus[k];
        else if (event_signs[t] < 0)
            ++counts.n_minus[k];
    }
    return counts;
}

}  // namespace fmom
