#pragma once

#include <crimenews/error.hpp>
#include <crimenews/text.hpp>

#include <chrono>
#include <compare>
#include <cstdio>
#include <string>
#include <string_view>

namespace crimenews {

struct Date {
    int year = 0;
    unsigned month = 0;
    unsigned day = 0;

    auto operator<=>(const Date&) const = default;

    std::string to_string() const {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year, month, day);
        return buf;
    }
};

namespace detail {

inline bool all_digits(std::string_view s) {
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return !s.empty();
}

inline unsigned to_uint(std::string_view s) {
    unsigned v = 0;
    for (char c : s) v = v * 10 + static_cast<unsigned>(c - '0');
    return v;
}

inline Date checked_date(unsigned y, unsigned m, unsigned d, std::string_view raw) {
    const std::chrono::year_month_day ymd{std::chrono::year(static_cast<int>(y)), std::chrono::month(m),
                                          std::chrono::day(d)};
    if (!ymd.ok()) throw Error(Errc::bad_date, "out-of-range date '" + std::string(raw) + "'");
    return Date{static_cast<int>(y), m, d};
}

} // namespace detail

/// Accepts the crawler's "YYYYMMDDHHMM" stamp (truncated to the day) and the
/// "DD-MM-YYYY" form used in printed reports.
inline Date normalize_date(std::string_view raw) {
    const auto s = text::trim(raw);
    if (s.size() == 12 && detail::all_digits(s)) {
        const auto hh = detail::to_uint(s.substr(8, 2));
        const auto mi = detail::to_uint(s.substr(10, 2));
        if (hh > 23 || mi > 59) throw Error(Errc::bad_date, "bad time of day in '" + std::string(s) + "'");
        return detail::checked_date(detail::to_uint(s.substr(0, 4)), detail::to_uint(s.substr(4, 2)),
                                    detail::to_uint(s.substr(6, 2)), s);
    }
    if (s.size() == 10 && s[2] == '-' && s[5] == '-' && detail::all_digits(s.substr(0, 2)) &&
        detail::all_digits(s.substr(3, 2)) && detail::all_digits(s.substr(6, 4))) {
        return detail::checked_date(detail::to_uint(s.substr(6, 4)), detail::to_uint(s.substr(3, 2)),
                                    detail::to_uint(s.substr(0, 2)), s);
    }
    throw Error(Errc::bad_date, "unrecognized date '" + std::string(s) + "'");
}

} // namespace crimenews
