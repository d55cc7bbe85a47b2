#pragma once

#include "fmom/windowing.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fmom {

/// Which multiplicities enter the moment: like-sign positive (pp), like-sign
/// negative (mm), unlike-sign cross product (pm), or all nonzero signs.
enum class sign_mode { pp, mm, pm, all };

/// Count filter for the general-order moment.
enum class sign_filter { plus, minus, all };

std::string to_string(sign_mode mode);
sign_mode sign_mode_from_string(std::string_view name);

/// n (n-1) ... (n-q+1); zero whenever n < q. Exact while the product fits in
/// 64 bits; the moment kernels accumulate the same product in double instead,
/// so they do not inherit that limit.
std::uint64_t falling_factorial(std::uint64_t n, unsigned q) noexcept;

struct moment_result {
    std::size_t n_bins = 1;
    double value = 0.0;
    sign_mode mode = sign_mode::pp;
    unsigned order = 2;
    std::size_t n_events = 0;
    /// <n+> for pp and pm, <n-> for mm, <n+ + n-> for all.
    double mean_multiplicity = 0.0;
    /// pm only: <n->.
    std::optional<double> mean_multiplicity_minus;

    double log_value() const;
};

/// One estimator: order q in `mode` at `n_bins`. pm is defined for order 2
/// only.
struct estimator_spec {
    unsigned order = 2;
    sign_mode mode = sign_mode::pp;
    std::size_t n_bins = 1;
};

/// Per-event sufficient statistics of one estimator. Event e contributes its
/// per-bin numerator average and its full-window counts; the moment over any
/// subset of events follows from these alone, which is what the bootstrap
/// resamples.
class event_terms {
public:
    event_terms(const event_set& events, const estimator_spec& est);

    const estimator_spec& spec() const noexcept { return est_; }
    std::size_t n_events() const noexcept { return numerator_.size(); }

    /// Moment over all events.
    moment_result evaluate() const;

    /// Moment over the events named by `indices` (repeats allowed).
    double evaluate(std::span<const std::uint32_t> indices) const;

private:
    estimator_spec est_;
    std::vector<double> numerator_;
    std::vector<double> count_a_;
    std::vector<double> count_b_;  // pm only
};

/// Normalized factorial moment of order q at n_bins over the filtered
/// counts. The normalizing mean is the global per-event average of the
/// full-window filtered count. Throws std::domain_error when that mean is
/// zero.
moment_result f_q(const event_set& events, unsigned q, std::size_t n_bins, sign_filter filter);

moment_result f2_pp(const event_set& events, std::size_t n_bins);
moment_result f2_mm(const event_set& events, std::size_t n_bins);

/// Unlike-sign second-order moment: per-bin n+ n- cross products normalized
/// by <n+><n-> / n_bins^2.
moment_result f2_pm(const event_set& events, std::size_t n_bins);

/// A scan request: one mode and order over a list of bin counts.
struct moment_spec {
    unsigned order = 2;
    sign_mode mode = sign_mode::pp;
    std::vector<std::size_t> bins_list;

    void validate(std::size_t window_len) const;
};

/// One result per entry of bins_list, ordered by ascending n_bins.
std::vector<moment_result> moment_scan(const event_set& events, const moment_spec& spec);

}  // namespace fmom
