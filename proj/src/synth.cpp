#include "fmom/synth.hpp"

#include "fmom/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fmom {

double rng_stream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::string to_string(generator_kind kind) {
    switch (kind) {
        case generator_kind::iid_bernoulli: return "iid-bernoulli";
        case generator_kind::markov_persistent: return "markov-persistent";
        case generator_kind::gaussian_walk: return "gaussian-walk";
    }
    throw std::invalid_argument("unknown generator_kind");
}

generator_kind generator_kind_from_string(std::string_view name) {
    if (name == "iid" || name == "iid-bernoulli") return generator_kind::iid_bernoulli;
    if (name == "markov" || name == "markov-persistent") return generator_kind::markov_persistent;
    if (name == "gaussian-walk" || name == "walk") return generator_kind::gaussian_walk;
    throw std::invalid_argument("unknown generator kind \"" + std::string(name) +
                                "\" (expect iid, markov or gaussian-walk)");
}

void generator_spec::validate() const {
    if (length < 1) throw std::invalid_argument("generator length must be >= 1");
    if (kind == generator_kind::iid_bernoulli && !(p_plus > 0.0 && p_plus < 1.0))
        throw std::invalid_argument("p_plus must lie strictly inside (0, 1)");
    if (kind == generator_kind::markov_persistent && !(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("rho must lie strictly inside (0, 1)");
}

sign_sequence gen_iid_signs(const generator_spec& spec) {
    if (spec.kind != generator_kind::iid_bernoulli)
        throw std::invalid_argument("spec kind is not iid-bernoulli");
    spec.validate();
    rng_stream rng(spec.seed);
    sign_sequence out;
    out.source_length = spec.length + 1;
    out.signs.resize(spec.length);
    for (auto& s : out.signs) s = rng.uniform() < spec.p_plus ? std::int8_t{1} : std::int8_t{-1};
    return out;
}

sign_sequence gen_markov_signs(const generator_spec& spec) {
    if (spec.kind != generator_kind::markov_persistent)
        throw std::invalid_argument("spec kind is not markov-persistent");
    spec.validate();
    rng_stream rng(spec.seed);
    sign_sequence out;
    out.source_length = spec.length + 1;
    out.signs.resize(spec.length);
    std::int8_t state = rng.uniform() < 0.5 ? std::int8_t{1} : std::int8_t{-1};
    for (auto& s : out.signs) {
        s = state;
        if (rng.uniform() >= spec.rho) state = -state;
    }
    return out;
}

price_series gen_gaussian_walk(const generator_spec& spec) {
    if (spec.kind != generator_kind::gaussian_walk)
        throw std::invalid_argument("spec kind is not gaussian-walk");
    spec.validate();
    rng_stream rng(spec.seed);
    price_series series;
    series.points.resize(spec.length);
    double y = 100.0;
    for (std::size_t t = 0; t < spec.length; ++t) {
        if (t > 0) y += rng.normal();
        series.points[t] = {t, std::nullopt, y};
    }
    return series;
}

double expected_f2_iid(std::size_t window_len, std::size_t n_bins) {
    if (n_bins < 1 || window_len % n_bins != 0)
        throw std::invalid_argument("n_bins must divide window_len (" + std::to_string(n_bins) +
                                    " does not divide " + std::to_string(window_len) + ")");
    const double s = static_cast<double>(window_len / n_bins);
    return (s - 1.0) / s;
}

}  // namespace fmom
