#pragma once

// Crime counts by (year, month, zone), zone ranking, and the occurrence score
//
//   P_ZM = (C_ZM / C_TM) * (C_Z / C_T)      when all four counts are positive, else 0
//
// C_ZM: crimes in the zone in that month (all years)   C_TM: all zones in that month
// C_Z:  crimes in the zone (all months and years)      C_T:  every crime

#include <crimenews/corpus.hpp>
#include <crimenews/error.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace crimenews {

inline constexpr std::string_view kUnknownZone = "unknown";

enum class ZoneLevel { district, thana };

class CrimeCube {
public:
    CrimeCube() = default;

    /// Dense zero cube over the given axes. Zones keep the given order.
    CrimeCube(std::vector<int> years, std::vector<std::string> zones)
        : years_(std::move(years)), zones_(std::move(zones)), counts_(years_.size() * 12 * zones_.size(), 0) {}

    const std::vector<int>& years() const { return years_; }
    const std::vector<std::string>& zones() const { return zones_; }

    std::optional<std::size_t> year_index(int year) const {
        const auto it = std::find(years_.begin(), years_.end(), year);
        if (it == years_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - years_.begin());
    }

    std::optional<std::size_t> zone_index(std::string_view zone) const {
        const auto it = std::find(zones_.begin(), zones_.end(), zone);
        if (it == zones_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - zones_.begin());
    }

    /// Cell by axis indices; month is 1-based.
    std::uint64_t& at(std::size_t year, unsigned month, std::size_t zone) {
        return counts_.at((year * 12 + (month - 1)) * zones_.size() + zone);
    }
    std::uint64_t at(std::size_t year, unsigned month, std::size_t zone) const {
        return counts_.at((year * 12 + (month - 1)) * zones_.size() + zone);
    }

    std::uint64_t grand_total() const {
        std::uint64_t t = 0;
        for (auto c : counts_) t += c;
        return t;
    }

    std::uint64_t zone_total(std::size_t zone) const {
        std::uint64_t t = 0;
        for (std::size_t y = 0; y < years_.size(); ++y)
            for (unsigned m = 1; m <= 12; ++m) t += at(y, m, zone);
        return t;
    }

private:
    std::vector<int> years_;
    std::vector<std::string> zones_;
    std::vector<std::uint64_t> counts_;
};

inline std::optional<std::string> zone_of(const Document& d, ZoneLevel level) {
    if (!d.location) return std::nullopt;
    const auto& loc = level == ZoneLevel::district ? d.location->district : d.location->thana;
    if (!loc) return std::nullopt;
    return loc->name;
}

/// Counts documents labeled `crime_label`, one cell each. Documents without a
/// zone land in the trailing "unknown" zone.
inline CrimeCube build_cube(const std::vector<Document>& docs, ZoneLevel level = ZoneLevel::district,
                            std::string_view crime_label = "crime") {
    std::set<int> years;
    std::set<std::string> zones;
    bool any_unknown = false;
    std::vector<const Document*> crimes;
    for (const auto& d : docs) {
        if (!d.category || *d.category != crime_label) continue;
        crimes.push_back(&d);
        years.insert(d.published_day.year);
        if (auto z = zone_of(d, level); z && *z != kUnknownZone)
            zones.insert(*z);
        else
            any_unknown = true;
    }
    std::vector<std::string> zone_axis(zones.begin(), zones.end());
    if (any_unknown) zone_axis.emplace_back(kUnknownZone);
    CrimeCube cube(std::vector<int>(years.begin(), years.end()), std::move(zone_axis));

    for (const auto* d : crimes) {
        const auto z = zone_of(*d, level);
        const auto zi = cube.zone_index(z ? *z : std::string(kUnknownZone));
        ++cube.at(*cube.year_index(d->published_day.year), d->published_day.month, *zi);
    }
    return cube;
}

struct Marginals {
    std::uint64_t c_zm = 0;
    std::uint64_t c_tm = 0;
    std::uint64_t c_z = 0;
    std::uint64_t c_t = 0;

    bool operator==(const Marginals&) const = default;
};

inline Marginals marginals(const CrimeCube& cube, unsigned month, std::string_view zone) {
    if (month < 1 || month > 12) throw Error(Errc::bad_month, std::to_string(month));
    const auto zi = cube.zone_index(zone);
    if (!zi || zone == kUnknownZone) throw Error(Errc::unknown_zone, std::string(zone));

    Marginals m;
    for (std::size_t y = 0; y < cube.years().size(); ++y) {
        for (unsigned mo = 1; mo <= 12; ++mo) {
            for (std::size_t z = 0; z < cube.zones().size(); ++z) {
                const auto c = cube.at(y, mo, z);
                m.c_t += c;
                if (mo == month) m.c_tm += c;
                if (z == *zi) m.c_z += c;
                if (mo == month && z == *zi) m.c_zm += c;
            }
        }
    }
    return m;
}

struct Prediction {
    std::string zone;
    unsigned month = 0;
    std::uint64_t c_zm = 0, c_tm = 0, c_z = 0, c_t = 0;
    double probability = 0.0;
};

inline Prediction predict(const CrimeCube& cube, unsigned month, std::string_view zone) {
    const auto m = marginals(cube, month, zone);
    Prediction p{std::string(zone), month, m.c_zm, m.c_tm, m.c_z, m.c_t, 0.0};
    if (m.c_zm > 0 && m.c_tm > 0 && m.c_z > 0 && m.c_t > 0)
        p.probability = (static_cast<double>(m.c_zm) / static_cast<double>(m.c_tm)) *
                        (static_cast<double>(m.c_z) / static_cast<double>(m.c_t));
    return p;
}

struct ZoneCount {
    std::string zone;
    std::uint64_t count = 0;

    bool operator==(const ZoneCount&) const = default;
};

/// Zones by total count, descending; equal counts in byte order of the label.
/// The unknown zone and zones without crimes are left out.
inline std::vector<ZoneCount> rank_zones(const CrimeCube& cube) {
    std::vector<ZoneCount> out;
    for (std::size_t z = 0; z < cube.zones().size(); ++z) {
        if (cube.zones()[z] == kUnknownZone) continue;
        if (const auto n = cube.zone_total(z); n > 0) out.push_back({cube.zones()[z], n});
    }
    std::sort(out.begin(), out.end(), [](const ZoneCount& a, const ZoneCount& b) {
        return a.count != b.count ? a.count > b.count : a.zone < b.zone;
    });
    return out;
}

} // namespace crimenews
