#include "fmom/windowing.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace fmom;
using testutil::make_signs;

TEST_CASE("window_config validation") {
    CHECK_NOTHROW((window_config{200, 0, 20}.validate()));
    CHECK_THROWS_AS((window_config{200, 0, 3}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((window_config{0, 0, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((window_config{4, 0, 0}.validate()), std::invalid_argument);
}

TEST_CASE("partition counts full windows and drops the tail") {
    sign_sequence signs;
    signs.signs.assign(688000, 1);
    signs.source_length = signs.size() + 1;
    const event_set events(signs, {200, 0, 1});
    CHECK(events.n_events() == 3440);
    CHECK(events.window_len() == 200);
}

TEST_CASE("partition with offset") {
    const auto signs = make_signs({1, -1, 1, 1, -1, 1, -1, -1, 1, 1});
    const event_set events(signs, {4, 1, 1});
    REQUIRE(events.n_events() == 2);
    const auto e0 = events.event(0);
    CHECK(e0[0] == -1);  // samples 1..4
    CHECK(e0[3] == -1);
    const auto e1 = events.event(1);
    CHECK(e1[0] == 1);  // samples 5..8
    CHECK(e1[3] == 1);
    CHECK_THROWS_AS(events.event(2), std::out_of_range);
}

TEST_CASE("partition rejects too-short input") {
    const auto signs = make_signs({1, -1, 1});
    CHECK_THROWS_AS((event_set(signs, {4, 0, 1})), std::invalid_argument);
    CHECK_THROWS_AS((event_set(signs, {2, 3, 1})), std::invalid_argument);
}

TEST_CASE("bin_multiplicities counts strict signs per bin") {
    SUBCASE("plain split") {
        const auto signs = make_signs({1, 1, 1, -1});
        const bin_counts c = bin_multiplicities({signs.signs.data(), 4}, 2);
        CHECK(c.bin_size == 2);
        CHECK(c.n_plus == std::vector<std::uint32_t>{2, 1});
        CHECK(c.n_minus == std::vector<std::uint32_t>{0, 1});
    }
    SUBCASE("ties excluded from both") {
        const auto signs = make_signs({1, 0, -1, 0});
        const bin_counts c = bin_multiplicities({signs.signs.data(), 4}, 2);
        CHECK(c.n_plus == std::vector<std::uint32_t>{1, 0});
        CHECK(c.n_minus == std::vector<std::uint32_t>{0, 1});
    }
    SUBCASE("identity binning") {
        const auto signs = make_signs({1, 0, -1, 1, 1, -1});
        const bin_counts c = bin_multiplicities({signs.signs.data(), 6}, 1);
        CHECK(c.n_plus == std::vector<std::uint32_t>{3});
        CHECK(c.n_minus == std::vector<std::uint32_t>{2});
    }
    SUBCASE("non-divisor rejected") {
        const auto signs = make_signs({1, 1, 1, -1});
        CHECK_THROWS_AS((bin_multiplicities({signs.signs.data(), 4}, 3)), std::invalid_argument);
    }
}

namespace {

sign_sequence random_signs(std::mt19937_64& eng, std::size_t n) {
    sign_sequence s;
    s.signs.resize(n);
    for (auto& v : s.signs) v = static_cast<std::int8_t>(static_cast<int>(eng() % 3) - 1);
    s.source_length = n + 1;
    return s;
}

}  // namespace

TEST_CASE("halving bins merges adjacent counts") {
    std::mt19937_64 eng(3);
    for (int rep = 0; rep < 30; ++rep) {
        const sign_sequence s = random_signs(eng, 24);
        for (const std::size_t b : {2u, 4u, 6u, 8u, 12u}) {
            const bin_counts fine = bin_multiplicities({s.signs.data(), s.size()}, b);
            if (b % 2 != 0) continue;
            const bin_counts coarse = bin_multiplicities({s.signs.data(), s.size()}, b / 2);
            for (std::size_t k = 0; k < b / 2; ++k) {
                CHECK(coarse.n_plus[k] == fine.n_plus[2 * k] + fine.n_plus[2 * k + 1]);
                CHECK(coarse.n_minus[k] == fine.n_minus[2 * k] + fine.n_minus[2 * k + 1]);
            }
        }
    }
}

TEST_CASE("per-bin totals reproduce event-level multiplicities") {
    std::mt19937_64 eng(5);
    const sign_sequence s = random_signs(eng, 40);
    for (const std::size_t b : {1u, 2u, 4u, 5u, 8u, 10u, 20u, 40u}) {
        const bin_counts c = bin_multiplicities({s.signs.data(), s.size()}, b);
        std::uint32_t plus = 0, minus = 0;
        for (std::size_t k = 0; k < c.n_bins(); ++k) {
            CHECK(c.n_plus[k] + c.n_minus[k] <= c.bin_size);
            plus += c.n_plus[k];
            minus += c.n_minus[k];
        }
        const bin_counts whole = bin_multiplicities({s.signs.data(), s.size()}, 1);
        CHECK(plus == whole.n_plus[0]);
        CHECK(minus == whole.n_minus[0]);
    }
}

TEST_CASE("shifting the offset by one window drops the first event") {
    std::mt19937_64 eng(9);
    const sign_sequence s = random_signs(eng, 137);
    const std::size_t w = 10;
    for (const std::size_t o : {0u, 3u, 7u}) {
        const event_set base(s, {w, o, 1});
        const event_set shifted(s, {w, o + w, 1});
        REQUIRE(shifted.n_events() == base.n_events() - 1);
        for (std::size_t e = 0; e < shifted.n_events(); ++e) {
            const auto a = base.event(e + 1);
            const auto b = shifted.event(e);
            for (std::size_t t = 0; t < w; ++t) CHECK(a[t] == b[t]);
        }
    }
}

TEST_CASE("events never cover more than the available samples") {
    std::mt19937_64 eng(17);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 5 + eng() % 300;
        const std::size_t w = 1 + eng() % 20;
        const std::size_t o = eng() % 10;
        const sign_sequence s = random_signs(eng, n);
        if (n < o + w) continue;
        const event_set events(s, {w, o, 1});
        CHECK(events.n_events() * w <= n);
        if (o == 0 && n % w == 0) CHECK(events.n_events() * w == n);
    }
}
