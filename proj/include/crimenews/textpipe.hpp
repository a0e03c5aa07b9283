#pragma once

#include <crimenews/corpus.hpp>
#include <crimenews/lexicon.hpp>
#include <crimenews/text.hpp>

#include <cstddef>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace crimenews {

using Tokens = std::vector<std::string>;

namespace detail {

/// Bangla block letters and signs (digits excluded) or ASCII letters.
inline bool is_word_char(char32_t cp) {
    if (cp >= 0x0980 && cp <= 0x09FF) return !(cp >= 0x09E6 && cp <= 0x09EF);
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

} // namespace detail

/// Splits on everything that is not a Bangla letter/sign or ASCII letter.
/// ASCII is lowercased; digits of either script act as separators.
inline Tokens tokenize(std::string_view input) {
    Tokens out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(std::move(cur));
        cur.clear();
    };
    for (std::size_t i = 0; i < input.size();) {
        const auto d = text::decode(input, i);
        const std::size_t len = d.len == 0 ? 1 : d.len;
        if (d.len != 0 && detail::is_word_char(d.cp)) {
            if (d.cp < 0x80)
                cur.push_back(text::ascii_lower(static_cast<char>(d.cp)));
            else
                cur.append(input.substr(i, len));
        } else {
            flush();
        }
        i += len;
    }
    flush();
    return out;
}

/// Stems every token, then drops it if the root is a stop word.
inline Tokens normalize(const Tokens& tokens, const Lexicon& lexicon) {
    Tokens out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
        const auto& root = lexicon.stem(t);
        if (!lexicon.is_stop(root)) out.push_back(root);
    }
    return out;
}

/// Raw tokens of a document: title first, then content.
inline Tokens document_raw_tokens(const Document& doc) {
    auto tokens = tokenize(doc.title);
    auto body = tokenize(doc.content);
    tokens.insert(tokens.end(), std::make_move_iterator(body.begin()), std::make_move_iterator(body.end()));
    return tokens;
}

inline void normalize_document(Document& doc, const Lexicon& lexicon) {
    doc.tokens = normalize(document_raw_tokens(doc), lexicon);
}

struct TermCounts {
    std::map<std::string, std::size_t> counts;
    std::size_t total = 0;

    std::size_t count(const std::string& term) const {
        const auto it = counts.find(term);
        return it == counts.end() ? 0 : it->second;
    }
};

inline TermCounts term_counts(const Tokens& tokens) {
    TermCounts tc;
    for (const auto& t : tokens) ++tc.counts[t];
    tc.total = tokens.size();
    return tc;
}

struct LabeledDocument {
    const Document* doc;
    std::string category;
};

/// Top words with their per-category occurrence counts.
struct FeatureVocabulary {
    std::set<std::string> terms;
    std::map<std::string, std::map<std::string, std::size_t>> per_category_counts;

    std::size_t count(const std::string& term, const std::string& category) const {
        const auto t = per_category_counts.find(term);
        if (t == per_category_counts.end()) return 0;
        const auto c = t->second.find(category);
        return c == t->second.end() ? 0 : c->second;
    }

    std::size_t total(const std::string& term) const {
        std::size_t sum = 0;
        if (const auto t = per_category_counts.find(term); t != per_category_counts.end())
            for (const auto& [_, n] : t->second) sum += n;
        return sum;
    }
};

/// A term is a top word when it is not a stop word and occurs strictly more
/// than `threshold` times across the labeled corpus.
inline FeatureVocabulary extract_top_words(const std::vector<LabeledDocument>& labeled, const Lexicon& lexicon,
                                           std::size_t threshold = 5) {
    std::map<std::string, std::map<std::string, std::size_t>> counts;
    std::map<std::string, std::size_t> totals;
    for (const auto& [doc, category] : labeled) {
        for (const auto& t : doc->tokens) {
            if (lexicon.is_stop(t)) continue;
            ++counts[t][category];
            ++totals[t];
        }
    }
    FeatureVocabulary vocab;
    for (auto& [term, per_cat] : counts) {
        if (totals[term] <= threshold) continue;
        vocab.terms.insert(term);
        vocab.per_category_counts.emplace(term, std::move(per_cat));
    }
    return vocab;
}

} // namespace crimenews
