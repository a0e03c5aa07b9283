#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace crimenews {

enum class Errc {
    missing_tag,
    malformed,
    encoding,
    io,
    format,
    cycle,
    unknown_parent,
    bad_coordinate,
    empty_category,
    empty_vocabulary,
    unknown_category,
    empty_collection,
    bad_date,
    unknown_zone,
    bad_month,
    missing_coordinates,
    config,
};

inline std::string_view errc_name(Errc code) {
    switch (code) {
    case Errc::missing_tag: return "MissingTag";
    case Errc::malformed: return "Malformed";
    case Errc::encoding: return "Encoding";
    case Errc::io: return "IO";
    case Errc::format: return "FormatError";
    case Errc::cycle: return "CycleError";
    case Errc::unknown_parent: return "UnknownParent";
    case Errc::bad_coordinate: return "BadCoordinate";
    case Errc::empty_category: return "EmptyCategory";
    case Errc::empty_vocabulary: return "EmptyVocabulary";
    case Errc::unknown_category: return "UnknownCategory";
    case Errc::empty_collection: return "EmptyCollection";
    case Errc::bad_date: return "BadDate";
    case Errc::unknown_zone: return "UnknownZone";
    case Errc::bad_month: return "BadMonth";
    case Errc::missing_coordinates: return "MissingCoordinates";
    case Errc::config: return "ConfigError";
    }
    return "Error";
}

/// Every failure raised by the library. `code()` identifies the failure class;
/// `line()` is the 1-based input line for file-format errors, 0 otherwise.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::size_t line = 0)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), line_(line) {}

    Errc code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }

private:
    Errc code_;
    std::size_t line_;
};

} // namespace crimenews
