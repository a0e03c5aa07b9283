#pragma once

// SVG dot map. Each ranked zone becomes a circle whose radius grows with its
// count up to a cap and whose colour shifts from the low to the high ramp
// colour as the count approaches the maximum.

#include <crimenews/analytics.hpp>
#include <crimenews/error.hpp>
#include <crimenews/lexicon.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crimenews {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;

    bool operator==(const Rgb&) const = default;

    std::string hex() const {
        static constexpr char digits[] = "0123456789ABCDEF";
        std::string s = "#";
        for (auto c : {r, g, b}) {
            s += digits[c >> 4];
            s += digits[c & 0xF];
        }
        return s;
    }

    static std::optional<Rgb> parse(std::string_view s) {
        if (s.size() != 7 || s[0] != '#') return std::nullopt;
        std::array<std::uint8_t, 3> ch{};
        for (std::size_t i = 0; i < 3; ++i) {
            const auto part = s.substr(1 + 2 * i, 2);
            const auto [p, ec] = std::from_chars(part.data(), part.data() + 2, ch[i], 16);
            if (ec != std::errc{} || p != part.data() + 2) return std::nullopt;
        }
        return Rgb{ch[0], ch[1], ch[2]};
    }
};

struct RenderStyle {
    double r_min = 3.0;
    double step = 1.5;
    double r_max = 15.0;
    Rgb low{0xFF, 0xA5, 0x00};
    Rgb high{0xFF, 0x00, 0x00};
};

struct DotSpec {
    std::string zone;
    std::uint64_t count = 0;
    double x = 0.0, y = 0.0;
    double radius = 0.0;
    Rgb color;
};

inline double dot_radius(std::uint64_t count, const RenderStyle& style = {}) {
    const double grown = style.r_min + style.step * (static_cast<double>(count) - 1.0);
    return std::clamp(grown, style.r_min, style.r_max);
}

inline Rgb dot_color(std::uint64_t count, std::uint64_t max_count, const RenderStyle& style = {}) {
    double t = 1.0;
    if (max_count > 1)
        t = std::clamp((static_cast<double>(count) - 1.0) / (static_cast<double>(max_count) - 1.0), 0.0, 1.0);
    auto mix = [t](std::uint8_t a, std::uint8_t b) {
        return static_cast<std::uint8_t>(std::lround(a + t * (static_cast<double>(b) - a)));
    };
    return {mix(style.low.r, style.high.r), mix(style.low.g, style.high.g), mix(style.low.b, style.high.b)};
}

/// Places one dot per ranked zone, in ranking order. A zone is looked up as
/// `kind` first and then under any kind.
inline std::vector<DotSpec> layout_dots(const std::vector<ZoneCount>& ranking, const Gazetteer& gazetteer,
                                        double canvas_w, double canvas_h, const RenderStyle& style = {},
                                        LocationKind kind = LocationKind::district) {
    std::uint64_t max_count = 0;
    for (const auto& z : ranking) max_count = std::max(max_count, z.count);

    std::vector<DotSpec> dots;
    dots.reserve(ranking.size());
    for (const auto& z : ranking) {
        const Location* loc = gazetteer.find(z.zone, kind);
        if (!loc) {
            const auto any = gazetteer.lookup(z.zone);
            if (any.empty()) throw Error(Errc::missing_coordinates, z.zone);
            loc = any.front();
        }
        dots.push_back({z.zone, z.count, loc->map_x * canvas_w, loc->map_y * canvas_h, dot_radius(z.count, style),
                        dot_color(z.count, max_count, style)});
    }
    return dots;
}

namespace detail {

inline std::string fixed2(double v) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
    return std::string(buf, p);
}

inline std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace detail

inline std::string render_svg(const std::vector<DotSpec>& dots, const std::optional<std::string>& background,
                              double canvas_w, double canvas_h) {
    using detail::fixed2;
    const auto w = fixed2(canvas_w);
    const auto h = fixed2(canvas_h);
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:xlink=\"http://www.w3.org/1999/xlink\" version=\"1.1\" "
           "width=\"" + w + "\" height=\"" + h + "\" viewBox=\"0.00 0.00 " + w + " " + h + "\">\n";
    svg += "  <rect x=\"0.00\" y=\"0.00\" width=\"" + w + "\" height=\"" + h + "\" fill=\"#FFFFFF\"/>\n";
    if (background)
        svg += "  <image xlink:href=\"" + detail::xml_escape(*background) + "\" x=\"0.00\" y=\"0.00\" width=\"" + w +
               "\" height=\"" + h + "\"/>\n";
    for (const auto& d : dots) {
        svg += "  <circle cx=\"" + fixed2(d.x) + "\" cy=\"" + fixed2(d.y) + "\" r=\"" + fixed2(d.radius) +
               "\" fill=\"" + d.color.hex() + "\" fill-opacity=\"0.80\"><title>" + detail::xml_escape(d.zone) +
               ": " + std::to_string(d.count) + "</title></circle>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace crimenews
