#include "fmom/uncertainty.hpp"

#include "fmom/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fmom {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double bootstrap_stat(const event_set& events, const estimator_spec& est,
                      std::size_t n_resamples, std::uint64_t seed) {
    if (events.n_events() < 2)
        throw std::invalid_argument("bootstrap needs at least 2 events");
    if (n_resamples < 100)
        throw std::invalid_argument("bootstrap needs at least 100 resamples");

    const event_terms terms(events, est);
    const std::size_t n = events.n_events();
    std::mt19937_64 engine(seed);
    std::vector<std::uint32_t> idx(n);
    std::vector<double> values(n_resamples);
    for (std::size_t r = 0; r < n_resamples; ++r) {
        for (std::size_t j = 0; j < n; ++j)
            idx[j] = static_cast<std::uint32_t>(engine() % n);
        values[r] = terms.evaluate(idx);
    }

    compensated_sum sum;
    for (const double v : values) sum.add(v);
    const double mean = sum.value() / static_cast<double>(n_resamples);
    compensated_sum sq;
    for (const double v : values) sq.add((v - mean) * (v - mean));
    return std::sqrt(sq.value() / static_cast<double>(n_resamples - 1));
}

std::vector<std::size_t> default_offsets(std::size_t window_len) {
    std::vector<std::size_t> offsets = {0, window_len / 4, window_len / 2};
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
    return offsets;
}

double systematic_offset_scan(const sign_sequence& signs, const window_config& cfg,
                              const estimator_spec& est,
                              std::span<const std::size_t> offsets) {
    if (offsets.empty()) throw std::invalid_argument("offset list must not be empty");
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const std::size_t offset : offsets) {
        const event_set events(signs, {cfg.window_len, offset, est.n_bins});
        const double f = event_terms(events, est).evaluate().value;
        lo = first ? f : std::min(lo, f);
        hi = first ? f : std::max(hi, f);
        first = false;
    }
    return (hi - lo) / 2.0;
}

uncertainty_report estimate_uncertainty(const sign_sequence& signs, const window_config& cfg,
                                        const estimator_spec& est, std::size_t n_resamples,
                                        std::uint64_t seed,
                                        std::span<const std::size_t> offsets) {
    uncertainty_report report;
    report.n_resamples = n_resamples;
    report.offsets_used.assign(offsets.begin(), offsets.end());
    report.seed = seed;
    const event_set events(signs, {cfg.window_len, 0, est.n_bins});
    report.stat_err = bootstrap_stat(events, est, n_resamples, seed);
    report.syst_err = systematic_offset_scan(signs, cfg, est, offsets);
    return report;
}

}  // namespace fmom
