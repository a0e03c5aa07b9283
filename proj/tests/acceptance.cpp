// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "oracles.hpp"
#include "support.hpp"

#include <crimenews/crimenews.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace crimenews;
using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& why) {
        if (!cond && ok) {
            ok = false;
            detail = why;
        }
    }
};

std::string term(std::size_t i) { return "w" + std::to_string(i); }

// ---------------------------------------------------------------------------
// 1 and 2: Naive Bayes against the product-space oracle

struct NbCase {
    std::vector<std::vector<std::string>> docs;
    std::vector<std::string> labels;
    std::vector<std::string> categories;
    std::set<std::string> vocab;
};

NbCase random_nb_case(std::mt19937& rng) {
    NbCase c;
    const std::size_t k = 2 + rng() % 4;             // 2..5 categories
    const std::size_t n = k + rng() % (6 - k + 1);   // k..6 docs, each category used
    const std::size_t b = 1 + rng() % 8;             // 1..8 vocabulary terms
    for (std::size_t i = 0; i < k; ++i) c.categories.push_back("c" + std::to_string(i));
    for (std::size_t i = 0; i < b; ++i) c.vocab.insert(term(i));
    for (std::size_t d = 0; d < n; ++d) {
        std::vector<std::string> toks(rng() % 7);
        for (auto& t : toks) t = term(rng() % (b + 2)); // a couple of out-of-vocabulary terms too
        c.docs.push_back(toks);
        c.labels.push_back(d < k ? c.categories[d] : c.categories[rng() % k]);
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto docs = c.docs;
    auto labels = c.labels;
    for (std::size_t i = 0; i < n; ++i) {
        c.docs[i] = docs[perm[i]];
        c.labels[i] = labels[perm[i]];
    }
    return c;
}

NBModel train_case(const NbCase& c, std::vector<Document>& storage) {
    storage.clear();
    for (std::size_t i = 0; i < c.docs.size(); ++i) storage.push_back(make_doc(i, c.docs[i]));
    std::vector<LabeledDocument> labeled;
    for (std::size_t i = 0; i < storage.size(); ++i) labeled.push_back({&storage[i], c.labels[i]});
    FeatureVocabulary v;
    v.terms = c.vocab;
    return train(labeled, v, c.categories);
}

std::vector<NBModel> g_models; // shared with criterion 2

Outcome nb_oracle() {
    Outcome o;
    std::mt19937 rng(1001);
    const auto t0 = Clock::now();
    std::size_t corpora = 0, queries = 0;
    double worst = 0;
    for (; corpora < 250; ++corpora) {
        const auto c = random_nb_case(rng);
        std::vector<Document> storage;
        const auto model = train_case(c, storage);
        g_models.push_back(model);
        for (int q = 0; q < 8; ++q, ++queries) {
            std::vector<std::string> query(rng() % 9);
            for (auto& t : query) t = term(rng() % (c.vocab.size() + 2));
            const auto got = categorize(model, query);
            const auto want = oracle::nb_products(c.docs, c.labels, c.vocab, c.categories, query);
            o.require(got.category == c.categories[oracle::argmax_first(want)],
                      "argmax mismatch in corpus " + std::to_string(corpora));
            for (std::size_t i = 0; i < want.size(); ++i) {
                const double diff = std::abs(got.log_scores[i] - std::log(want[i]));
                worst = std::max(worst, diff);
                o.require(diff <= 1e-12, "log score off by " + std::to_string(diff));
            }
        }
    }
    const double secs = seconds_since(t0);
    o.require(secs < 5.0, "took " + std::to_string(secs) + " s");
    std::ostringstream s;
    s << corpora << " corpora, " << queries << " queries, max |dlog| " << worst << ", " << secs << " s";
    if (o.ok) o.detail = s.str();
    return o;
}

Outcome smoothing_sums() {
    Outcome o;
    double worst = 0;
    for (const auto& m : g_models)
        for (const auto& c : m.categories) {
            double sum = 0;
            for (const auto& t : m.vocabulary) sum += smoothed_likelihood(m, t, c);
            worst = std::max(worst, std::abs(sum - 1.0));
        }
    o.require(!g_models.empty(), "no models from criterion 1");
    o.require(worst <= 1e-9, "sum off by " + std::to_string(worst));
    std::ostringstream d;
    d << g_models.size() << " models, max |sum-1| " << worst;
    if (o.ok) o.detail = d.str();
    return o;
}

// ---------------------------------------------------------------------------
// 3: cosine axioms

Outcome cosine_axioms() {
    Outcome o;
    std::mt19937 rng(3003);
    std::uniform_real_distribution<double> weight(0.0, 100.0), alpha(1e-4, 1e4);
    auto random_vec = [&] {
        std::map<std::string, double> w;
        for (int k = rng() % 10; k > 0; --k) w[term(rng() % 16)] = weight(rng);
        return TermVector::from_weights(w);
    };
    const auto t0 = Clock::now();
    const int cases = 5000;
    for (int i = 0; i < cases; ++i) {
        const auto a = random_vec();
        const auto b = random_vec();
        const double ab = cosine(a, b);
        o.require(ab == cosine(b, a), "asymmetric");
        o.require(ab >= 0.0 && ab <= 1.0 + 1e-12, "out of range");
        if (!a.empty()) o.require(std::abs(cosine(a, a) - 1.0) <= 1e-12, "self similarity");
        o.require(std::abs(cosine(a.scaled(alpha(rng)), b) - ab) <= 1e-12, "scale variance");
    }
    const double secs = seconds_since(t0);
    o.require(secs < 2.0, "took " + std::to_string(secs) + " s");
    if (o.ok) o.detail = std::to_string(cases) + " cases, " + std::to_string(secs) + " s";
    return o;
}

// ---------------------------------------------------------------------------
// 4: planted duplicate fixture

ResolvedLocation place(const std::string& thana, const std::string& district) {
    ResolvedLocation r;
    r.thana = Location{thana, LocationKind::thana, district, 0.5, 0.5};
    r.district = Location{district, LocationKind::district, "", 0.5, 0.5};
    r.all_matches = {*r.thana, *r.district};
    return r;
}

Outcome planted_duplicates() {
    Outcome o;
    std::mt19937 rng(4004);
    const std::vector<ResolvedLocation> places{place("দোহার", "ঢাকা"), place("রাজনগর", "মৌলভীবাজার"),
                                               place("সবুজবাগ", "ঢাকা"), place("হাটহাজারী", "চট্টগ্রাম")};
    std::size_t next_word = 0;
    auto fresh_text = [&] {
        std::vector<std::string> t;
        for (int i = 0; i < 30; ++i) t.push_back(term(next_word++));
        return t;
    };
    std::vector<Document> docs;
    auto add = [&](std::vector<std::string> toks, Date day, const ResolvedLocation& loc) {
        auto d = make_doc(docs.size(), std::move(toks), day);
        d.location = loc;
        docs.push_back(std::move(d));
        return docs.size() - 1;
    };
    std::set<std::pair<std::size_t, std::size_t>> planted;
    unsigned day = 1;
    for (int i = 0; i < 5; ++i, ++day) { // copies with 3 of 30 tokens replaced
        auto text = fresh_text();
        const Date when{2014, 5, day};
        const auto& loc = places[i % places.size()];
        const auto a = add(text, when, loc);
        for (int e = 0; e < 3; ++e) text[rng() % text.size()] = term(next_word++);
        const auto b = add(text, when, loc);
        planted.emplace(a, b);
    }
    for (int i = 0; i < 3; ++i, ++day) { // same text, next day
        const auto text = fresh_text();
        add(text, {2014, 5, day}, places[0]);
        add(text, {2014, 5, day + 1}, places[0]);
        ++day;
    }
    for (int i = 0; i < 2; ++i, ++day) { // same text and day, other place
        const auto text = fresh_text();
        add(text, {2014, 5, day}, places[1]);
        add(text, {2014, 5, day}, places[3]);
    }
    while (docs.size() < 30) add(fresh_text(), {2014, 6, 1}, places[2]);

    // Expected verdicts: the rule applied to independently computed similarities.
    std::vector<std::vector<std::string>> raw;
    for (const auto& d : docs) raw.push_back(d.tokens);
    std::set<std::pair<std::size_t, std::size_t>> expected;
    for (std::size_t i = 0; i < docs.size(); ++i)
        for (std::size_t j = i + 1; j < docs.size(); ++j) {
            const double sim = oracle::tfidf_cosine(raw, i, j);
            const bool same_day = docs[i].published_day == docs[j].published_day;
            const bool same_place = docs[i].location->thana->name == docs[j].location->thana->name;
            if (sim > 0.60 && same_day && same_place) expected.emplace(i, j);
        }
    o.require(expected == planted, "fixture self-check: oracle does not flag exactly the planted pairs");

    const auto r = dedup(docs, 0.60);
    std::set<std::pair<std::size_t, std::size_t>> flagged;
    for (const auto& v : r.verdicts)
        if (v.duplicate) flagged.emplace(v.doc_a, v.doc_b);
    o.require(flagged == planted, "dedup flagged " + std::to_string(flagged.size()) + " pairs");
    o.require(r.survivors.size() == 25, "survivors " + std::to_string(r.survivors.size()));
    if (o.ok) o.detail = "30 docs, flagged exactly the 5 planted pairs";
    return o;
}

// ---------------------------------------------------------------------------
// 5: FindLocation on the two sample articles

Lexicon fixture_lexicon() {
    return {load_stop_words(data_dir() / "stop_words.txt"), load_stem_map(data_dir() / "stem_map.txt")};
}

Outcome sample_locations() {
    Outcome o;
    const auto lex = fixture_lexicon();
    const auto gaz = load_gazetteer(data_dir() / "gazetteer.csv");
    o.require(gaz.size() > 2, "gazetteer has no distractors");
    const std::pair<const char*, std::pair<const char*, const char*>> cases[] = {
        {"001_crime.rec", {"দোহার", "ঢাকা"}},
        {"002_crime.rec", {"রাজনগর", "মৌলভীবাজার"}},
    };
    for (const auto& [file, want] : cases) {
        const auto doc = to_document(parse_record(read_file(data_dir() / "corpus" / file)), 0);
        const auto r = find_location(doc, gaz, lex);
        const bool ok = r.thana && r.district && r.thana->name == want.first && r.district->name == want.second;
        o.require(ok, std::string(file) + " resolved to " + (r.thana ? r.thana->name : "-") + "/" +
                          (r.district ? r.district->name : "-"));
    }
    if (o.ok) o.detail = "দোহার/ঢাকা and রাজনগর/মৌলভীবাজার";
    return o;
}

// ---------------------------------------------------------------------------
// 6 and 7: cube marginals and prediction

struct RandomCube {
    CrimeCube cube;
    oracle::Cells cells;
};

std::vector<RandomCube> g_cubes;

RandomCube random_cube(std::mt19937& rng) {
    const std::size_t ny = 1 + rng() % 4, nz = 1 + rng() % 8;
    std::vector<int> years;
    std::vector<std::string> zones;
    for (std::size_t y = 0; y < ny; ++y) years.push_back(2011 + static_cast<int>(y));
    for (std::size_t z = 0; z < nz; ++z) zones.push_back("zone" + std::to_string(z));
    RandomCube rc{CrimeCube(years, zones), oracle::Cells(ny, std::vector<std::vector<std::uint64_t>>(
                                                                 12, std::vector<std::uint64_t>(nz)))};
    const unsigned density = rng() % 4; // some cubes are mostly empty
    for (std::size_t y = 0; y < ny; ++y)
        for (unsigned m = 1; m <= 12; ++m)
            for (std::size_t z = 0; z < nz; ++z) {
                const std::uint64_t v = rng() % 4 < density ? rng() % 20 : 0;
                rc.cube.at(y, m, z) = v;
                rc.cells[y][m - 1][z] = v;
            }
    return rc;
}

Outcome cube_marginals() {
    Outcome o;
    std::mt19937 rng(6006);
    for (int i = 0; i < 150; ++i) g_cubes.push_back(random_cube(rng));
    std::size_t queries = 0;
    for (const auto& [cube, cells] : g_cubes) {
        std::uint64_t sum_cz = 0, sum_ctm = 0, c_t = 0;
        for (unsigned m = 1; m <= 12; ++m)
            for (std::size_t z = 0; z < cube.zones().size(); ++z, ++queries) {
                const auto got = marginals(cube, m, cube.zones()[z]);
                const auto want = oracle::cube_sums(cells, m, z);
                o.require(got.c_zm == want.c_zm && got.c_tm == want.c_tm && got.c_z == want.c_z &&
                              got.c_t == want.c_t,
                          "marginal mismatch");
                if (m == 1) sum_cz += got.c_z;
                if (z == 0) sum_ctm += got.c_tm;
                c_t = got.c_t;
            }
        o.require(sum_cz == c_t && sum_ctm == c_t && c_t == cube.grand_total(), "marginal identity broken");
    }
    if (o.ok) o.detail = std::to_string(g_cubes.size()) + " cubes, " + std::to_string(queries) + " queries exact";
    return o;
}

Outcome prediction_formula() {
    Outcome o;
    for (std::size_t zn = 1; zn <= 8; ++zn) {
        std::vector<std::string> zones;
        for (std::size_t z = 0; z < zn; ++z) zones.push_back("zone" + std::to_string(z));
        CrimeCube cube({2013, 2014}, zones);
        for (std::size_t y = 0; y < 2; ++y)
            for (unsigned m = 1; m <= 12; ++m)
                for (std::size_t z = 0; z < zn; ++z) cube.at(y, m, z) = 7;
        const double want = 1.0 / static_cast<double>(zn * zn);
        for (unsigned m = 1; m <= 12; ++m)
            for (const auto& z : zones)
                o.require(std::abs(predict(cube, m, z).probability - want) <= 1e-12, "uniform cube");
    }

    CrimeCube single({2012}, {"ঢাকা", "সিলেট"});
    single.at(0, 7, 0) = 5;
    o.require(predict(single, 7, "ঢাকা").probability == 1.0, "single cell");
    o.require(predict(single, 8, "ঢাকা").probability == 0.0, "empty month");
    o.require(predict(single, 7, "সিলেট").probability == 0.0, "empty zone");

    std::size_t checked = 0;
    for (const auto& [cube, cells] : g_cubes)
        for (unsigned m = 1; m <= 12; ++m)
            for (const auto& z : cube.zones()) {
                const auto p = predict(cube, m, z);
                ++checked;
                if (p.c_zm == 0 || p.c_tm == 0 || p.c_z == 0 || p.c_t == 0) {
                    o.require(p.probability == 0.0, "zero marginal gave nonzero score");
                    continue;
                }
                const double bound = std::min(static_cast<double>(p.c_zm) / static_cast<double>(p.c_tm),
                                              static_cast<double>(p.c_z) / static_cast<double>(p.c_t));
                o.require(p.probability >= 0.0 && p.probability <= bound && bound <= 1.0, "bound violated");
            }
    o.require(checked > 0, "no cubes from criterion 6");
    if (o.ok) o.detail = "uniform Zn=1..8, single cell, " + std::to_string(checked) + " bounded queries";
    return o;
}

// ---------------------------------------------------------------------------
// 8: normalize idempotence

Outcome normalize_idempotence() {
    Outcome o;
    const auto lex = fixture_lexicon();
    std::vector<std::string> pool;
    for (const auto& [k, v] : lex.stem_map) pool.insert(pool.end(), {k, v});
    pool.insert(pool.end(), lex.stop_words.begin(), lex.stop_words.end());
    for (int i = 0; i < 20; ++i) pool.push_back(term(i));
    std::mt19937 rng(8008);
    for (int i = 0; i < 1000; ++i) {
        Tokens x(rng() % 25);
        for (auto& t : x) t = pool[rng() % pool.size()];
        const auto once = normalize(x, lex);
        o.require(normalize(once, lex) == once, "list " + std::to_string(i) + " changed on second pass");
    }
    if (o.ok) o.detail = "1000 lists over " + std::to_string(pool.size()) + " lexicon terms";
    return o;
}

// ---------------------------------------------------------------------------
// 9: render determinism and radius bounds

Outcome render_properties() {
    Outcome o;
    const auto gaz = load_gazetteer(data_dir() / "gazetteer.csv");
    std::vector<ZoneCount> ranking;
    std::uint64_t n = 40;
    for (const auto& e : gaz.entries())
        if (e.kind == LocationKind::district) ranking.push_back({e.name, n > 3 ? n -= 3 : 1});
    const auto a = render_svg(layout_dots(ranking, gaz, 800, 1000), std::nullopt, 800, 1000);
    const auto b = render_svg(layout_dots(ranking, gaz, 800, 1000), std::nullopt, 800, 1000);
    o.require(a == b, "renders differ");
    double prev = 0;
    for (std::uint64_t c = 0; c <= 5000; ++c) {
        const double r = dot_radius(c);
        o.require(r >= prev, "radius decreased at count " + std::to_string(c));
        o.require(r >= 3.0 && r <= 15.0, "radius out of [3, 15]");
        prev = r;
    }
    if (o.ok) o.detail = std::to_string(ranking.size()) + " dots byte-identical, radius monotone in [3, 15]";
    return o;
}

// ---------------------------------------------------------------------------
// 10: end to end on the bundled fixture

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        std::vector<std::string> cols;
        std::istringstream ls(line);
        std::string col;
        while (std::getline(ls, col, ',')) cols.push_back(col);
        rows.push_back(cols);
    }
    return rows;
}

Outcome end_to_end() {
    Outcome o;
    TempDir tmp;
    const auto t0 = Clock::now();
    const auto r = run_cli("pipeline -c '" + (data_dir() / "pipeline.conf").string() + "' --model '" +
                           (tmp / "model.nb").string() + "' --out '" + (tmp / "out").string() + "'");
    const double secs = seconds_since(t0);
    o.require(r.status == 0, "pipeline exited " + std::to_string(r.status) + ": " + r.output);
    if (!o.ok) return o;
    o.require(secs < 10.0, "took " + std::to_string(secs) + " s");

    const auto report = read_file(tmp / "out/dedup_report.txt");
    std::set<std::string> removed;
    std::istringstream rep(report);
    for (std::string line; std::getline(rep, line);)
        if (const auto arrow = line.find(" <- "); arrow != std::string::npos)
            removed.insert(line.substr(arrow + 4, line.find(' ', arrow + 4) - arrow - 4));
    o.require(removed.size() == 2 && report.find("removed=2\n") != std::string::npos,
              "removed " + std::to_string(removed.size()) + " duplicates");

    const auto cats = csv_rows(read_file(tmp / "out/categorized.csv"));
    std::size_t correct = 0, surviving_crime = 0;
    for (const auto& row : cats) {
        if (row.size() < 5) continue;
        if (row[3] == row[4]) ++correct;
        if (row[4] == "crime" && !removed.contains(row[0])) ++surviving_crime;
    }
    o.require(cats.size() == 20, "categorized " + std::to_string(cats.size()) + " docs");
    o.require(correct >= 18, "only " + std::to_string(correct) + "/20 correct");

    std::uint64_t ranked = 0;
    for (const auto& row : csv_rows(read_file(tmp / "out/rank.csv"))) ranked += std::stoull(row.at(1));
    o.require(ranked == surviving_crime, "rank total " + std::to_string(ranked) + " vs surviving crime docs " +
                                             std::to_string(surviving_crime));
    if (o.ok) {
        std::ostringstream s;
        s << secs << " s, removed 2, " << correct << "/20 correct, rank total " << ranked;
        o.detail = s.str();
    }
    return o;
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"AC1 naive bayes matches product-space oracle", nb_oracle},
        {"AC2 smoothed likelihoods sum to one", smoothing_sums},
        {"AC3 cosine axioms", cosine_axioms},
        {"AC4 planted duplicates flagged exactly", planted_duplicates},
        {"AC5 sample articles resolve to expected thana/district", sample_locations},
        {"AC6 cube marginals match summation oracle", cube_marginals},
        {"AC7 prediction formula", prediction_formula},
        {"AC8 normalize is idempotent", normalize_idempotence},
        {"AC9 render determinism and radius bounds", render_properties},
        {"AC10 end-to-end pipeline on bundled fixture", end_to_end},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %s: %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
        failed += !o.ok;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
