#include "fmom/moments.hpp"

#include "fmom/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fmom {

std::string to_string(sign_mode mode) {
    switch (mode) {
        case sign_mode::pp: return "pp";
        case sign_mode::mm: return "mm";
        case sign_mode::pm: return "pm";
        case sign_mode::all: return "all";
    }
    throw std::invalid_argument("unknown sign_mode");
}

sign_mode sign_mode_from_string(std::string_view name) {
    if (name == "pp") return sign_mode::pp;
    if (name == "mm") return sign_mode::mm;
    if (name == "pm") return sign_mode::pm;
    if (name == "all") return sign_mode::all;
    throw std::invalid_argument("unknown mode \"" + std::string(name) + "\" (expect pp, mm, pm or all)");
}

std::uint64_t falling_factorial(std::uint64_t n, unsigned q) noexcept {
    if (n < q) return 0;
    std::uint64_t prod = 1;
    for (unsigned j = 0; j < q; ++j) prod *= n - j;
    return prod;
}

double moment_result::log_value() const { return std::log(value); }

namespace {

// n (n-1) ... (n-q+1) in double; exact factors, so the relative rounding is
// bounded by (q-1) ulp for any count.
double falling_factorial_d(std::uint32_t n, unsigned q) {
    if (n < q) return 0.0;
    double prod = 1.0;
    for (unsigned j = 0; j < q; ++j) prod *= static_cast<double>(n - j);
    return prod;
}

void validate_estimator(const estimator_spec& est, std::size_t window_len) {
    if (est.order < 2) throw std::invalid_argument("moment order must be >= 2");
    if (est.mode == sign_mode::pm && est.order != 2)
        throw std::invalid_argument("pm mode is defined for order 2 only");
    if (est.n_bins < 1 || window_len % est.n_bins != 0)
        throw std::invalid_argument("n_bins must divide window_len (" +
                                    std::to_string(est.n_bins) + " does not divide " +
                                    std::to_string(window_len) + ")");
}

double mean_of(const std::vector<double>& v) {
    compensated_sum s;
    for (const double x : v) s.add(x);
    return s.value() / static_cast<double>(v.size());
}

double mean_of(std::span<const std::uint32_t> idx, const std::vector<double>& v) {
    compensated_sum s;
    for (const std::uint32_t i : idx) s.add(v[i]);
    return s.value() / static_cast<double>(idx.size());
}

[[noreturn]] void fail_zero_mean(sign_mode mode) {
    throw std::domain_error("zero mean multiplicity for mode " + to_string(mode) +
                            "; the moment is undefined");
}

}  // namespace

event_terms::event_terms(const event_set& events, const estimator_spec& est) : est_(est) {
    validate_estimator(est, events.window_len());

    const std::size_t n_bins = est.n_bins;
    const std::size_t bin_size = events.window_len() / n_bins;
    const std::size_t n = events.n_events();
    numerator_.resize(n);
    count_a_.resize(n);
    if (est.mode == sign_mode::pm) count_b_.resize(n);

    std::vector<std::uint32_t> np(n_bins), nm(n_bins);
    for (std::size_t e = 0; e < n; ++e) {
        const auto w = events.event(e);
        std::fill(np.begin(), np.end(), 0);
        std::fill(nm.begin(), nm.end(), 0);
        for (std::size_t t = 0; t < w.size(); ++t) {
            const std::size_t k = t / bin_size;
            if (w[t] > 0)
                ++np[k];
            else if (w[t] < 0)
                ++nm[k];
        }
        double num = 0.0;
        std::uint64_t total_p = 0, total_m = 0;
        for (std::size_t k = 0; k < n_bins; ++k) {
            total_p += np[k];
            total_m += nm[k];
            switch (est.mode) {
                case sign_mode::pp: num += falling_factorial_d(np[k], est.order); break;
                case sign_mode::mm: num += falling_factorial_d(nm[k], est.order); break;
                case sign_mode::all: num += falling_factorial_d(np[k] + nm[k], est.order); break;
                case sign_mode::pm: num += static_cast<double>(np[k]) * nm[k]; break;
            }
        }
        numerator_[e] = num / static_cast<double>(n_bins);
        switch (est.mode) {
            case sign_mode::pp:
            case sign_mode::pm: count_a_[e] = static_cast<double>(total_p); break;
            case sign_mode::mm: count_a_[e] = static_cast<double>(total_m); break;
            case sign_mode::all: count_a_[e] = static_cast<double>(total_p + total_m); break;
        }
        if (est.mode == sign_mode::pm) count_b_[e] = static_cast<double>(total_m);
    }
}

moment_result event_terms::evaluate() const {
    const double num = mean_of(numerator_);
    const double mean_a = mean_of(count_a_);
    const double n_bins = static_cast<double>(est_.n_bins);

    moment_result res;
    res.n_bins = est_.n_bins;
    res.mode = est_.mode;
    res.order = est_.order;
    res.n_events = n_events();
    res.mean_multiplicity = mean_a;
    if (est_.mode == sign_mode::pm) {
        const double mean_b = mean_of(count_b_);
        res.mean_multiplicity_minus = mean_b;
        if (mean_a <= 0.0 || mean_b <= 0.0) fail_zero_mean(est_.mode);
        res.value = num / (mean_a * mean_b / (n_bins * n_bins));
    } else {
        if (mean_a <= 0.0) fail_zero_mean(est_.mode);
        res.value = num / ipow(mean_a / n_bins, est_.order);
    }
    return res;
}

double event_terms::evaluate(std::span<const std::uint32_t> indices) const {
    if (indices.empty()) throw std::domain_error("empty event selection");
    const double num = mean_of(indices, numerator_);
    const double mean_a = mean_of(indices, count_a_);
    const double n_bins = static_cast<double>(est_.n_bins);
    if (est_.mode == sign_mode::pm) {
        const double mean_b = mean_of(indices, count_b_);
        if (mean_a <= 0.0 || mean_b <= 0.0) fail_zero_mean(est_.mode);
        return num / (mean_a * mean_b / (n_bins * n_bins));
    }
    if (mean_a <= 0.0) fail_zero_mean(est_.mode);
    return num / ipow(mean_a / n_bins, est_.order);
}

moment_result f_q(const event_set& events, unsigned q, std::size_t n_bins, sign_filter filter) {
    sign_mode mode = sign_mode::all;
    if (filter == sign_filter::plus) mode = sign_mode::pp;
    if (filter == sign_filter::minus) mode = sign_mode::mm;
    return event_terms(events, {q, mode, n_bins}).evaluate();
}

moment_result f2_pp(const event_set& events, std::size_t n_bins) {
    return event_terms(events, {2, sign_mode::pp, n_bins}).evaluate();
}

moment_result f2_mm(const event_set& events, std::size_t n_bins) {
    return event_terms(events, {2, sign_mode::mm, n_bins}).evaluate();
}

moment_result f2_pm(const event_set& events, std::size_t n_bins) {
    return event_terms(events, {2, sign_mode::pm, n_bins}).evaluate();
}

void moment_spec::validate(std::size_t window_len) const {
    if (bins_list.empty()) throw std::invalid_argument("bins_list must not be empty");
    for (const std::size_t b : bins_list) validate_estimator({order, mode, b}, window_len);
}

std::vector<moment_result> moment_scan(const event_set& events, const moment_spec& spec) {
    spec.validate(events.window_len());
    std::vector<std::size_t> bins = spec.bins_list;
    std::sort(bins.begin(), bins.end());
    std::vector<moment_result> results;
    results.reserve(bins.size());
    for (const std::size_t b : bins)
        results.push_back(event_terms(events, {spec.order, spec.mode, b}).evaluate());
    return results;
}

}  // namespace fmom
