#pragma once

#include "fmom/series.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace fmom {

enum class generator_kind { iid_bernoulli, markov_persistent, gaussian_walk };

std::string to_string(generator_kind kind);
generator_kind generator_kind_from_string(std::string_view name);

/// Parameters of a synthetic sequence generator.
struct generator_spec {
    generator_kind kind = generator_kind::iid_bernoulli;
    double p_plus = 0.5;     // iid: probability of +1, strictly inside (0,1)
    double rho = 0.5;        // markov: P(sign_t == sign_{t-1}), strictly inside (0,1)
    std::size_t length = 0;  // signs for the sign generators, samples for the walk
    std::uint64_t seed = 0;

    void validate() const;
};

/// i.i.d. signs: +1 with probability p_plus, -1 otherwise. Emits no zeros.
sign_sequence gen_iid_signs(const generator_spec& spec);

/// Two-state Markov chain on {+1,-1}: stay with probability rho, flip with
/// 1-rho; initial state equiprobable.
sign_sequence gen_markov_signs(const generator_spec& spec);

/// Random walk y(t) = y(t-1) + e_t with e_t ~ N(0,1), y(0) = 100, returned
/// as a price series so the full ingestion path can be exercised.
price_series gen_gaussian_walk(const generator_spec& spec);

/// Exact expectation of the like-sign second-order moment under i.i.d.
/// signs with constant p: (s-1)/s with bin size s = window_len / n_bins.
double expected_f2_iid(std::size_t window_len, std::size_t n_bins);

}  // namespace fmom
