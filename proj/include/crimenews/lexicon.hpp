#pragma once

// Plain-text lexical resources: stop list, stem dictionary and gazetteer.
//
//   stop list   one term per line
//   stem map    "<inflected> <root>" per line, whitespace separated
//   gazetteer   CSV with header name,kind,parent,map_x,map_y
//
// Blank lines and lines starting with '#' are ignored in all three.

#include <crimenews/error.hpp>
#include <crimenews/location.hpp>
#include <crimenews/text.hpp>

#include <charconv>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace crimenews {

using StopWords = std::set<std::string>;
using StemMap = std::map<std::string, std::string>;

struct Lexicon {
    StopWords stop_words;
    StemMap stem_map; // root-closed: every value is a fixed point

    /// Root form of `term`, or `term` itself when the dictionary has no entry.
    const std::string& stem(const std::string& term) const {
        const auto it = stem_map.find(term);
        return it == stem_map.end() ? term : it->second;
    }

    bool is_stop(const std::string& term) const { return stop_words.contains(term); }

    bool operator==(const Lexicon&) const = default;
};

namespace detail {

inline bool skippable(std::string_view line) {
    return line.empty() || line.front() == '#';
}

} // namespace detail

inline StopWords parse_stop_words(std::string_view data) {
    text::require_utf8(data, "stop list");
    StopWords out;
    for (auto raw : text::lines(text::strip_bom(data))) {
        const auto line = text::trim(raw);
        if (detail::skippable(line)) continue;
        out.insert(text::ascii_lower(line));
    }
    return out;
}

inline StopWords load_stop_words(const std::filesystem::path& path) {
    return parse_stop_words(text::read_file(path));
}

/// Parses inflected->root pairs and collapses chains so that every value is a
/// root. A later line for the same inflected form replaces an earlier one.
inline StemMap parse_stem_map(std::string_view data) {
    text::require_utf8(data, "stem map");
    StemMap direct;
    std::size_t lineno = 0;
    for (auto raw : text::lines(text::strip_bom(data))) {
        ++lineno;
        const auto line = text::trim(raw);
        if (detail::skippable(line)) continue;
        const auto f = text::fields(line);
        if (f.size() != 2)
            throw Error(Errc::format,
                        "stem map line " + std::to_string(lineno) + ": expected 2 fields, got " +
                            std::to_string(f.size()),
                        lineno);
        direct[text::ascii_lower(f[0])] = text::ascii_lower(f[1]);
    }

    StemMap closed;
    for (const auto& [key, first] : direct) {
        std::set<std::string_view> seen{key};
        std::string_view cur = first;
        for (;;) {
            const auto it = direct.find(std::string(cur));
            if (it == direct.end() || it->second == cur) break; // root: absent or self-mapped
            if (!seen.insert(cur).second || it->second == key)
                throw Error(Errc::cycle, "stem chain through '" + key + "' does not terminate");
            cur = it->second;
        }
        closed.emplace(key, std::string(cur));
    }
    return closed;
}

inline StemMap load_stem_map(const std::filesystem::path& path) {
    return parse_stem_map(text::read_file(path));
}

/// Validated place-name table. Names are unique per (name, kind); a name may
/// appear under several kinds (a district and its namesake division).
class Gazetteer {
public:
    Gazetteer() = default;

    /// Validates hierarchy and coordinates. District parents are checked against
    /// divisions only when the table declares at least one division.
    explicit Gazetteer(std::vector<Location> entries) : entries_(std::move(entries)) {
        bool has_divisions = false;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& e = entries_[i];
            if (e.name.empty()) throw Error(Errc::format, "gazetteer entry with empty name");
            if (!(e.map_x >= 0.0 && e.map_x <= 1.0 && e.map_y >= 0.0 && e.map_y <= 1.0))
                throw Error(Errc::bad_coordinate, e.name);
            if (find(e.name, e.kind)) throw Error(Errc::format, "duplicate gazetteer entry " + e.name);
            by_name_[e.name].push_back(i);
            has_divisions = has_divisions || e.kind == LocationKind::division;
        }
        for (const auto& e : entries_) {
            if (e.kind == LocationKind::thana && !find(e.parent, LocationKind::district))
                throw Error(Errc::unknown_parent, e.name + " -> " + e.parent);
            if (e.kind == LocationKind::district && has_divisions && !e.parent.empty() &&
                !find(e.parent, LocationKind::division))
                throw Error(Errc::unknown_parent, e.name + " -> " + e.parent);
        }
    }

    const std::vector<Location>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    bool contains(const std::string& name) const { return by_name_.contains(name); }

    /// All entries carrying `name`, in file order.
    std::vector<const Location*> lookup(const std::string& name) const {
        std::vector<const Location*> out;
        if (const auto it = by_name_.find(name); it != by_name_.end())
            for (auto i : it->second) out.push_back(&entries_[i]);
        return out;
    }

    const Location* find(const std::string& name, LocationKind kind) const {
        if (const auto it = by_name_.find(name); it != by_name_.end())
            for (auto i : it->second)
                if (entries_[i].kind == kind) return &entries_[i];
        return nullptr;
    }

    bool operator==(const Gazetteer& o) const { return entries_ == o.entries_; }

private:
    std::vector<Location> entries_;
    std::map<std::string, std::vector<std::size_t>, std::less<>> by_name_;
};

inline Gazetteer parse_gazetteer(std::string_view data) {
    text::require_utf8(data, "gazetteer");
    std::vector<Location> entries;
    bool header_seen = false;
    std::size_t lineno = 0;
    for (auto raw : text::lines(text::strip_bom(data))) {
        ++lineno;
        const auto line = text::trim(raw);
        if (detail::skippable(line)) continue;
        auto cols = text::split(line, ',');
        for (auto& c : cols) c = text::trim(c);
        if (!header_seen) {
            if (cols.size() != 5 || cols[0] != "name" || cols[1] != "kind" || cols[2] != "parent" ||
                cols[3] != "map_x" || cols[4] != "map_y")
                throw Error(Errc::format, "gazetteer header must be name,kind,parent,map_x,map_y", lineno);
            header_seen = true;
            continue;
        }
        if (cols.size() != 5)
            throw Error(Errc::format, "gazetteer line " + std::to_string(lineno) + ": expected 5 columns",
                        lineno);
        const auto kind = parse_kind(cols[1]);
        if (!kind)
            throw Error(Errc::format, "gazetteer line " + std::to_string(lineno) + ": unknown kind '" +
                                          std::string(cols[1]) + "'",
                        lineno);
        Location loc{std::string(cols[0]), *kind, std::string(cols[2]), 0.0, 0.0};
        for (auto [col, dst] : {std::pair{cols[3], &loc.map_x}, std::pair{cols[4], &loc.map_y}}) {
            const auto [ptr, ec] = std::from_chars(col.data(), col.data() + col.size(), *dst);
            if (ec != std::errc{} || ptr != col.data() + col.size() || !(*dst >= 0.0 && *dst <= 1.0))
                throw Error(Errc::bad_coordinate, loc.name, lineno);
        }
        entries.push_back(std::move(loc));
    }
    if (!header_seen) throw Error(Errc::format, "gazetteer is missing its header row");
    return Gazetteer(std::move(entries));
}

inline Gazetteer load_gazetteer(const std::filesystem::path& path) {
    return parse_gazetteer(text::read_file(path));
}

} // namespace crimenews
