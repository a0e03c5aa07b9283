#pragma once

#include <crimenews/calendar.hpp>
#include <crimenews/corpus.hpp>
#include <crimenews/lexicon.hpp>
#include <crimenews/location.hpp>
#include <crimenews/textpipe.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace crimenews {

namespace detail {

struct Mentions {
    std::vector<const Location*> order; // first-occurrence order, unique
    std::map<const Location*, std::size_t> count;

    void add(const Location* loc) {
        if (count[loc]++ == 0) order.push_back(loc);
    }

    const Location* most_frequent(LocationKind kind) const {
        const Location* best = nullptr;
        std::size_t best_n = 0;
        for (const auto* loc : order) {
            if (loc->kind != kind) continue;
            const auto n = count.at(loc);
            if (n > best_n) {
                best = loc;
                best_n = n;
            }
        }
        return best;
    }
};

} // namespace detail

/// Matches stemmed raw tokens (stop words kept) against gazetteer names. The
/// thana picked is the most mentioned one, ties going to the earliest mention;
/// the district is that thana's parent, or else the most mentioned district.
/// A non-empty city hint counts as extra mentions after the text.
inline ResolvedLocation find_location(const Document& doc, const Gazetteer& gazetteer, const Lexicon& lexicon) {
    detail::Mentions mentions;
    auto scan = [&](const Tokens& tokens) {
        for (const auto& raw : tokens) {
            const auto& root = lexicon.stem(raw);
            auto hits = gazetteer.lookup(root);
            if (hits.empty() && root != raw) hits = gazetteer.lookup(raw);
            for (const auto* loc : hits) mentions.add(loc);
        }
    };
    scan(document_raw_tokens(doc));
    if (!doc.city_hint.empty()) scan(tokenize(doc.city_hint));

    ResolvedLocation out;
    for (const auto* loc : mentions.order) out.all_matches.push_back(*loc);
    if (const auto* thana = mentions.most_frequent(LocationKind::thana)) {
        out.thana = *thana;
        out.district = *gazetteer.find(thana->parent, LocationKind::district);
    } else if (const auto* district = mentions.most_frequent(LocationKind::district)) {
        out.district = *district;
    }
    return out;
}

} // namespace crimenews
