#pragma once

#include "fmom/windowing.hpp"
#include "oracle.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace testutil {

inline fmom::sign_sequence make_signs(std::initializer_list<int> values) {
    fmom::sign_sequence s;
    for (const int v : values) s.signs.push_back(static_cast<std::int8_t>(v));
    s.source_length = s.signs.size() + 1;
    return s;
}

inline fmom::sign_sequence flatten(const oracle::instance& events) {
    fmom::sign_sequence s;
    for (const auto& ev : events)
        for (const int v : ev) s.signs.push_back(static_cast<std::int8_t>(v));
    s.source_length = s.signs.size() + 1;
    return s;
}

// One event per instance row; all rows must share a length.
inline fmom::event_set make_events(const oracle::instance& events) {
    return fmom::event_set(flatten(events), {events.front().size(), 0, 1});
}

inline double rel_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

}  // namespace testutil
