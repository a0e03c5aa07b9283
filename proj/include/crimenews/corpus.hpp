#pragma once

// Crawled news records. The crawler writes pseudo-XML:
//
//   <Index>
//   <filePath>...</filePath> <byteInfo>...</byteInfo> <indexed>true</indexed>
//   <TITLE>...</TITLE> <CONTENT>...</CONTENT> <CATEGORY>...</CATEGORY>
//   <CITY>...</CITY> <DOMAIN>...</DOMAIN> <DATE>YYYYMMDDHHMM</DATE>
//   <URL>...</URL> <TYPE>...</TYPE> <PATH>...</PATH> <BYTE_INFO>...</BYTE_INFO>
//   </Index>
//
// Values are not escaped, so records are scanned by literal tag delimiters
// instead of an XML parser.

#include <crimenews/calendar.hpp>
#include <crimenews/error.hpp>
#include <crimenews/location.hpp>
#include <crimenews/text.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace crimenews {

inline constexpr std::size_t kMaxRecordBytes = 16u << 20;

struct RawRecord {
    std::string file_path;
    std::string title;
    std::string content;
    std::string category_hint;
    std::string city_hint;
    std::string domain;
    std::string published_at;
    std::string url;
    std::string record_type;
    std::string byte_info;

    bool operator==(const RawRecord&) const = default;
};

struct Document {
    std::size_t id = 0;
    std::string title;
    std::string content;
    std::vector<std::string> tokens;
    Date published_day;
    std::string source_domain;
    std::string url;
    std::string city_hint;
    std::string category_hint;
    std::optional<std::string> category;
    std::optional<ResolvedLocation> location;
};

namespace detail {

enum class Field { file_path, title, content, category, city, domain, date, url, type, byte_info, none };

inline Field field_for(std::string_view tag) {
    struct Entry {
        std::string_view name;
        Field field;
    };
    static constexpr std::array<Entry, 12> table{{
        {"filePath", Field::file_path},
        {"PATH", Field::file_path},
        {"byteInfo", Field::byte_info},
        {"BYTE_INFO", Field::byte_info},
        {"TITLE", Field::title},
        {"CONTENT", Field::content},
        {"CATEGORY", Field::category},
        {"CITY", Field::city},
        {"DOMAIN", Field::domain},
        {"DATE", Field::date},
        {"URL", Field::url},
        {"TYPE", Field::type},
    }};
    for (const auto& e : table)
        if (text::iequals(e.name, tag)) return e.field;
    return Field::none;
}

inline bool is_tag_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

/// Case-insensitive search for "</name>" starting at `from`.
inline std::size_t find_close(std::string_view s, std::string_view name, std::size_t from) {
    for (auto p = s.find("</", from); p != std::string_view::npos; p = s.find("</", p + 2)) {
        const auto after = p + 2 + name.size();
        if (after < s.size() && s[after] == '>' && text::iequals(s.substr(p + 2, name.size()), name))
            return p;
    }
    return std::string_view::npos;
}

inline std::string* slot(RawRecord& r, Field f) {
    switch (f) {
    case Field::file_path: return &r.file_path;
    case Field::title: return &r.title;
    case Field::content: return &r.content;
    case Field::category: return &r.category_hint;
    case Field::city: return &r.city_hint;
    case Field::domain: return &r.domain;
    case Field::date: return &r.published_at;
    case Field::url: return &r.url;
    case Field::type: return &r.record_type;
    case Field::byte_info: return &r.byte_info;
    case Field::none: break;
    }
    return nullptr;
}

inline bool mandatory(Field f) {
    return f == Field::title || f == Field::content || f == Field::date;
}

} // namespace detail

/// Parses one crawled record. Duplicated tags resolve to their last
/// occurrence; unknown tags and the optional <Index> envelope are skipped.
inline RawRecord parse_record(std::string_view bytes) {
    if (bytes.size() > kMaxRecordBytes)
        throw Error(Errc::malformed, "record exceeds " + std::to_string(kMaxRecordBytes) + " bytes");
    text::require_utf8(bytes, "record");

    RawRecord rec;
    bool seen_title = false, seen_content = false, seen_date = false;
    std::size_t pos = 0;
    while ((pos = bytes.find('<', pos)) != std::string_view::npos) {
        auto end = pos + 1;
        while (end < bytes.size() && detail::is_tag_char(bytes[end])) ++end;
        if (end == pos + 1 || end >= bytes.size() || bytes[end] != '>') {
            ++pos;
            continue;
        }
        const auto name = bytes.substr(pos + 1, end - pos - 1);
        const auto field = detail::field_for(name);
        if (field == detail::Field::none) {
            pos = end + 1;
            continue;
        }
        const auto close = detail::find_close(bytes, name, end + 1);
        if (close == std::string_view::npos) {
            if (detail::mandatory(field))
                throw Error(Errc::malformed, "<" + std::string(name) + "> is never closed");
            pos = end + 1;
            continue;
        }
        *detail::slot(rec, field) = std::string(text::trim(bytes.substr(end + 1, close - end - 1)));
        seen_title = seen_title || field == detail::Field::title;
        seen_content = seen_content || field == detail::Field::content;
        seen_date = seen_date || field == detail::Field::date;
        pos = close + name.size() + 3;
    }

    if (!seen_title) throw Error(Errc::missing_tag, "TITLE");
    if (!seen_content) throw Error(Errc::missing_tag, "CONTENT");
    if (!seen_date) throw Error(Errc::missing_tag, "DATE");
    if (rec.title.empty()) throw Error(Errc::malformed, "empty TITLE");
    if (rec.content.empty()) throw Error(Errc::malformed, "empty CONTENT");
    if (rec.published_at.size() != 12) throw Error(Errc::malformed, "DATE must be 12 digits");
    try {
        normalize_date(rec.published_at);
    } catch (const Error& e) {
        throw Error(Errc::malformed, e.what());
    }
    return rec;
}

/// Inverse of parse_record for values without surrounding whitespace or tag text.
inline std::string serialize_record(const RawRecord& r) {
    std::string out = "<Index>\n";
    auto put = [&out](std::string_view tag, const std::string& value) {
        out.append("<").append(tag).append(">").append(value).append("</").append(tag).append(">\n");
    };
    put("filePath", r.file_path);
    put("byteInfo", r.byte_info);
    put("TITLE", r.title);
    put("CONTENT", r.content);
    put("CATEGORY", r.category_hint);
    put("CITY", r.city_hint);
    put("DOMAIN", r.domain);
    put("DATE", r.published_at);
    put("URL", r.url);
    put("TYPE", r.record_type);
    out += "</Index>\n";
    return out;
}

struct LoadedCorpus {
    std::vector<RawRecord> records;
    std::size_t skipped = 0;
};

/// Parses every regular file under `dir`. Unparseable files are counted, not
/// fatal. The order depends only on file contents.
inline LoadedCorpus load_corpus(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw Error(Errc::io, "not a readable directory: " + dir.string());

    LoadedCorpus out;
    fs::recursive_directory_iterator it(dir, ec);
    if (ec) throw Error(Errc::io, "cannot read " + dir.string() + ": " + ec.message());
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) throw Error(Errc::io, "cannot read " + dir.string() + ": " + ec.message());
        if (!it->is_regular_file(ec)) continue;
        try {
            if (it->file_size() > kMaxRecordBytes) {
                ++out.skipped;
                continue;
            }
            out.records.push_back(parse_record(text::read_file(it->path())));
        } catch (const Error&) {
            ++out.skipped;
        }
    }
    auto key = [](const RawRecord& r) {
        return std::tie(r.published_at, r.url, r.domain, r.title, r.content, r.category_hint, r.city_hint,
                        r.file_path, r.record_type, r.byte_info);
    };
    std::sort(out.records.begin(), out.records.end(),
              [&](const RawRecord& a, const RawRecord& b) { return key(a) < key(b); });
    return out;
}

inline Document to_document(const RawRecord& r, std::size_t id) {
    Document d;
    d.id = id;
    d.title = r.title;
    d.content = r.content;
    d.published_day = normalize_date(r.published_at);
    d.source_domain = r.domain;
    d.url = r.url;
    d.city_hint = r.city_hint;
    d.category_hint = r.category_hint;
    return d;
}

/// Documents with ids 0..n-1 in corpus order.
inline std::vector<Document> to_documents(const std::vector<RawRecord>& records) {
    std::vector<Document> docs;
    docs.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) docs.push_back(to_document(records[i], i));
    return docs;
}

} // namespace crimenews
