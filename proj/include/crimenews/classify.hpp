#pragma once

// Multinomial Naive Bayes over the top-word vocabulary.
//
//   prior(c)          = docs in c / all docs
//   likelihood(t | c) = (T_ct + 1) / (sum_t' T_ct' + B)     add-one smoothing
//   score(c, d)       = ln prior(c) + sum over vocabulary tokens of ln likelihood(t | c)
//
// Scores use the natural logarithm. Out-of-vocabulary tokens are skipped.

#include <crimenews/error.hpp>
#include <crimenews/text.hpp>
#include <crimenews/textpipe.hpp>

#include <charconv>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace crimenews {

inline const std::vector<std::string>& default_categories() {
    static const std::vector<std::string> cats{"crime", "sports", "entertainment", "technology", "others"};
    return cats;
}

inline constexpr std::string_view kScoreLogBase = "e";

struct NBModel {
    std::vector<std::string> categories;
    std::vector<std::size_t> doc_counts;
    std::vector<double> priors;
    std::vector<std::map<std::string, std::size_t>> term_counts; // per category, nonzero entries only
    std::vector<std::size_t> category_totals;
    std::set<std::string> vocabulary;

    std::size_t vocabulary_size() const { return vocabulary.size(); }

    std::optional<std::size_t> category_index(std::string_view label) const {
        for (std::size_t i = 0; i < categories.size(); ++i)
            if (categories[i] == label) return i;
        return std::nullopt;
    }

    std::size_t count(std::size_t category, const std::string& term) const {
        const auto& m = term_counts.at(category);
        const auto it = m.find(term);
        return it == m.end() ? 0 : it->second;
    }

    double likelihood(std::size_t category, const std::string& term) const {
        return (static_cast<double>(count(category, term)) + 1.0) /
               static_cast<double>(category_totals[category] + vocabulary.size());
    }

    bool operator==(const NBModel&) const = default;
};

/// `categories` fixes both the label set and the tie-break order.
inline NBModel train(const std::vector<LabeledDocument>& labeled, const FeatureVocabulary& vocab,
                     const std::vector<std::string>& categories = default_categories()) {
    if (vocab.terms.empty()) throw Error(Errc::empty_vocabulary, "no top words to train on");

    NBModel m;
    m.categories = categories;
    m.vocabulary = vocab.terms;
    m.doc_counts.assign(categories.size(), 0);
    m.term_counts.assign(categories.size(), {});
    m.category_totals.assign(categories.size(), 0);

    for (const auto& [doc, label] : labeled) {
        const auto idx = m.category_index(label);
        if (!idx) throw Error(Errc::unknown_category, label);
        ++m.doc_counts[*idx];
        for (const auto& t : doc->tokens) {
            if (!m.vocabulary.contains(t)) continue;
            ++m.term_counts[*idx][t];
            ++m.category_totals[*idx];
        }
    }
    for (std::size_t i = 0; i < categories.size(); ++i)
        if (m.doc_counts[i] == 0) throw Error(Errc::empty_category, categories[i]);

    const auto n = static_cast<double>(labeled.size());
    for (auto c : m.doc_counts) m.priors.push_back(static_cast<double>(c) / n);
    return m;
}

inline double smoothed_likelihood(const NBModel& model, const std::string& term, std::string_view category) {
    const auto idx = model.category_index(category);
    if (!idx) throw Error(Errc::unknown_category, std::string(category));
    return model.likelihood(*idx, term);
}

struct Categorization {
    std::string category;
    std::vector<double> log_scores; // aligned with NBModel::categories, natural log
    double margin = 0.0;            // winner minus runner-up; +inf with a single category
};

inline Categorization categorize(const NBModel& model, const Tokens& tokens) {
    Categorization out;
    out.log_scores.reserve(model.categories.size());
    for (std::size_t c = 0; c < model.categories.size(); ++c) {
        double score = std::log(model.priors[c]);
        for (const auto& t : tokens)
            if (model.vocabulary.contains(t)) score += std::log(model.likelihood(c, t));
        out.log_scores.push_back(score);
    }

    std::size_t best = 0;
    for (std::size_t c = 1; c < out.log_scores.size(); ++c)
        if (out.log_scores[c] > out.log_scores[best]) best = c;
    double runner_up = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < out.log_scores.size(); ++c)
        if (c != best && out.log_scores[c] > runner_up) runner_up = out.log_scores[c];

    out.category = model.categories.at(best);
    out.margin = out.log_scores.size() > 1 ? out.log_scores[best] - runner_up
                                           : std::numeric_limits<double>::infinity();
    return out;
}

inline Categorization categorize(const NBModel& model, const Document& doc) {
    return categorize(model, doc.tokens);
}

// Model file:
//   nbmodel <B> <category>...            header, tab separated
//   <category> <term> <count>            one per (category, vocabulary term)
//   prior <category> <docs> <total docs>
inline std::string save_model(const NBModel& m) {
    std::string out = "nbmodel\t" + std::to_string(m.vocabulary.size());
    for (const auto& c : m.categories) out += "\t" + c;
    out += "\n";
    for (std::size_t c = 0; c < m.categories.size(); ++c)
        for (const auto& t : m.vocabulary)
            out += m.categories[c] + "\t" + t + "\t" + std::to_string(m.count(c, t)) + "\n";
    std::size_t total = 0;
    for (auto n : m.doc_counts) total += n;
    for (std::size_t c = 0; c < m.categories.size(); ++c)
        out += "prior\t" + m.categories[c] + "\t" + std::to_string(m.doc_counts[c]) + "\t" + std::to_string(total) +
               "\n";
    return out;
}

inline NBModel parse_model(std::string_view data) {
    text::require_utf8(data, "model");
    auto number = [](std::string_view s, std::size_t line) {
        std::size_t v = 0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size())
            throw Error(Errc::format, "model line " + std::to_string(line) + ": bad number", line);
        return v;
    };

    NBModel m;
    std::size_t declared_b = 0;
    std::size_t total_docs = 0;
    bool header = false;
    std::size_t lineno = 0;
    for (auto raw : text::lines(data)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        if (raw.empty() || raw.front() == '#') continue;
        const auto f = text::split(raw, '\t');
        if (!header) {
            if (f.size() < 3 || f[0] != "nbmodel") throw Error(Errc::format, "missing nbmodel header", lineno);
            declared_b = number(f[1], lineno);
            for (std::size_t i = 2; i < f.size(); ++i) m.categories.emplace_back(f[i]);
            m.doc_counts.assign(m.categories.size(), 0);
            m.term_counts.assign(m.categories.size(), {});
            m.category_totals.assign(m.categories.size(), 0);
            header = true;
        } else if (f.size() == 4 && f[0] == "prior") {
            const auto idx = m.category_index(f[1]);
            if (!idx) throw Error(Errc::unknown_category, std::string(f[1]), lineno);
            m.doc_counts[*idx] = number(f[2], lineno);
            total_docs = number(f[3], lineno);
        } else if (f.size() == 3) {
            const auto idx = m.category_index(f[0]);
            if (!idx) throw Error(Errc::unknown_category, std::string(f[0]), lineno);
            const std::string term(f[1]);
            const auto n = number(f[2], lineno);
            m.vocabulary.insert(term);
            if (n > 0) {
                m.term_counts[*idx][term] = n;
                m.category_totals[*idx] += n;
            }
        } else {
            throw Error(Errc::format, "model line " + std::to_string(lineno) + ": unexpected field count", lineno);
        }
    }
    if (!header) throw Error(Errc::format, "empty model file");
    if (m.vocabulary.size() != declared_b)
        throw Error(Errc::format, "model declares B=" + std::to_string(declared_b) + " but lists " +
                                      std::to_string(m.vocabulary.size()) + " terms");
    if (m.vocabulary.empty()) throw Error(Errc::empty_vocabulary, "model has no vocabulary");
    std::size_t sum = 0;
    for (std::size_t c = 0; c < m.categories.size(); ++c) {
        if (m.doc_counts[c] == 0) throw Error(Errc::empty_category, m.categories[c]);
        sum += m.doc_counts[c];
    }
    if (sum != total_docs) throw Error(Errc::format, "prior document counts do not add up");
    for (auto c : m.doc_counts) m.priors.push_back(static_cast<double>(c) / static_cast<double>(sum));
    return m;
}

} // namespace crimenews
