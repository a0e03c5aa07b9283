#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crimenews {

enum class LocationKind { division, district, thana };

inline std::string_view kind_name(LocationKind k) {
    switch (k) {
    case LocationKind::division: return "division";
    case LocationKind::district: return "district";
    case LocationKind::thana: return "thana";
    }
    return "?";
}

inline std::optional<LocationKind> parse_kind(std::string_view s) {
    if (s == "division") return LocationKind::division;
    if (s == "district") return LocationKind::district;
    if (s == "thana") return LocationKind::thana;
    return std::nullopt;
}

/// A gazetteer entry. Coordinates are normalized to the map canvas, [0, 1] on both axes.
struct Location {
    std::string name;
    LocationKind kind = LocationKind::district;
    std::string parent;
    double map_x = 0.0;
    double map_y = 0.0;

    bool operator==(const Location&) const = default;
};

struct ResolvedLocation {
    std::optional<Location> thana;
    std::optional<Location> district;
    std::vector<Location> all_matches;

    bool empty() const { return !thana && !district; }
    bool operator==(const ResolvedLocation&) const = default;
};

} // namespace crimenews
