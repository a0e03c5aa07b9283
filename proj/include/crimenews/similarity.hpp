#pragma once

// TF-IDF vectors, cosine similarity and cross-source duplicate detection.

#include <crimenews/corpus.hpp>
#include <crimenews/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace crimenews {

enum class IdfMode {
    smoothed, // ln((N + 1) / (df + 1)) + 1
    plain,    // ln(N / df)
};

class TermVector {
public:
    TermVector() = default;

    /// Non-positive weights are dropped.
    static TermVector from_weights(const std::map<std::string, double>& weights) {
        TermVector v;
        for (const auto& [t, w] : weights)
            if (w > 0.0) v.weights_.emplace(t, w);
        v.update_norm();
        return v;
    }

    const std::map<std::string, double>& weights() const { return weights_; }
    double norm() const { return norm_; }
    bool empty() const { return weights_.empty(); }

    TermVector scaled(double alpha) const {
        auto w = weights_;
        for (auto& [_, x] : w) x *= alpha;
        return from_weights(w);
    }

private:
    void update_norm() {
        double sq = 0.0;
        for (const auto& [_, w] : weights_) sq += w * w;
        norm_ = std::sqrt(sq);
    }

    std::map<std::string, double> weights_;
    double norm_ = 0.0;
};

/// Raw term frequency times corpus IDF, one vector per document in input order.
inline std::vector<TermVector> build_vectors(const std::vector<Document>& docs, IdfMode mode = IdfMode::smoothed) {
    if (docs.empty()) throw Error(Errc::empty_collection, "cannot weight an empty collection");

    std::vector<std::map<std::string, std::size_t>> tf(docs.size());
    std::map<std::string, std::size_t> df;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        for (const auto& t : docs[i].tokens) ++tf[i][t];
        for (const auto& [t, _] : tf[i]) ++df[t];
    }

    const auto n = static_cast<double>(docs.size());
    std::map<std::string, double> idf;
    for (const auto& [t, d] : df) {
        const auto dfv = static_cast<double>(d);
        idf[t] = mode == IdfMode::smoothed ? std::log((n + 1.0) / (dfv + 1.0)) + 1.0 : std::log(n / dfv);
    }

    std::vector<TermVector> out;
    out.reserve(docs.size());
    for (const auto& counts : tf) {
        std::map<std::string, double> w;
        for (const auto& [t, c] : counts) w[t] = static_cast<double>(c) * idf[t];
        out.push_back(TermVector::from_weights(w));
    }
    return out;
}

/// Dot product walks both term maps in key order, so the result is exactly symmetric.
inline double cosine(const TermVector& a, const TermVector& b) {
    if (a.norm() == 0.0 || b.norm() == 0.0) return 0.0;
    double dot = 0.0;
    auto ia = a.weights().begin();
    auto ib = b.weights().begin();
    while (ia != a.weights().end() && ib != b.weights().end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            dot += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return std::clamp(dot / (a.norm() * b.norm()), 0.0, 1.0);
}

inline constexpr double kDefaultDuplicateThreshold = 0.60;

struct DuplicateVerdict {
    std::size_t doc_a = 0;
    std::size_t doc_b = 0;
    double similarity = 0.0;
    bool same_date = false;
    bool same_location = false;
    bool duplicate = false;
};

/// Compares at the most specific level both sides resolved. Two documents
/// without any location compare equal; one-sided absence does not.
inline bool same_primary_location(const std::optional<ResolvedLocation>& a, const std::optional<ResolvedLocation>& b) {
    const bool a_empty = !a || a->empty();
    const bool b_empty = !b || b->empty();
    if (a_empty || b_empty) return a_empty && b_empty;
    if (a->thana && b->thana) return a->thana->name == b->thana->name;
    if (a->district && b->district) return a->district->name == b->district->name;
    return false;
}

inline DuplicateVerdict judge_pair(const Document& a, const Document& b, double sim,
                                   double threshold = kDefaultDuplicateThreshold) {
    DuplicateVerdict v;
    v.doc_a = a.id;
    v.doc_b = b.id;
    v.similarity = sim;
    v.same_date = a.published_day == b.published_day;
    v.same_location = same_primary_location(a.location, b.location);
    v.duplicate = sim > threshold && v.same_date && v.same_location;
    return v;
}

struct DuplicateGroup {
    std::size_t survivor = 0;
    std::vector<std::pair<std::size_t, double>> removed; // (doc id, similarity to survivor)
};

struct DedupResult {
    std::vector<Document> survivors;
    std::vector<DuplicateVerdict> verdicts; // every pair above threshold / 2
    std::vector<DuplicateGroup> groups;     // ordered by survivor id
    std::size_t pairs_evaluated = 0;

    std::size_t removed_count() const {
        std::size_t n = 0;
        for (const auto& g : groups) n += g.removed.size();
        return n;
    }
};

/// All-pairs scan. Duplicate pairs are merged transitively and each group
/// keeps its lowest-id document.
inline DedupResult dedup(const std::vector<Document>& docs, double threshold = kDefaultDuplicateThreshold,
                         IdfMode mode = IdfMode::smoothed) {
    DedupResult out;
    if (docs.empty()) return out;

    const auto vectors = build_vectors(docs, mode);
    std::vector<std::size_t> parent(docs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto id_less = [&](std::size_t i, std::size_t j) { return docs[i].id < docs[j].id; };

    for (std::size_t i = 0; i < docs.size(); ++i) {
        for (std::size_t j = i + 1; j < docs.size(); ++j) {
            ++out.pairs_evaluated;
            const auto sim = cosine(vectors[i], vectors[j]);
            if (!(sim > threshold * 0.5)) continue;
            auto v = judge_pair(docs[i], docs[j], sim, threshold);
            if (docs[j].id < docs[i].id) std::swap(v.doc_a, v.doc_b);
            if (v.duplicate) {
                auto ri = root(i), rj = root(j);
                if (ri != rj) {
                    if (id_less(rj, ri)) std::swap(ri, rj);
                    parent[rj] = ri; // root is always the lowest id of its group
                }
            }
            out.verdicts.push_back(v);
        }
    }
    std::sort(out.verdicts.begin(), out.verdicts.end(), [](const auto& x, const auto& y) {
        return std::pair(x.doc_a, x.doc_b) < std::pair(y.doc_a, y.doc_b);
    });

    std::map<std::size_t, std::size_t> group_of_root; // root index -> position in groups
    std::vector<std::size_t> order(docs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), id_less);
    for (auto i : order) {
        const auto r = root(i);
        if (r == i) continue;
        auto [it, fresh] = group_of_root.try_emplace(r, out.groups.size());
        if (fresh) out.groups.push_back({docs[r].id, {}});
        out.groups[it->second].removed.emplace_back(docs[i].id, cosine(vectors[r], vectors[i]));
    }
    std::sort(out.groups.begin(), out.groups.end(),
              [](const auto& x, const auto& y) { return x.survivor < y.survivor; });

    for (std::size_t i = 0; i < docs.size(); ++i)
        if (root(i) == i) out.survivors.push_back(docs[i]);
    return out;
}

} // namespace crimenews
