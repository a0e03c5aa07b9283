#pragma once

// Stage orchestration used by the command-line tool: configuration, the
// stage functions, and the text formats of every emitted artifact.

#include <crimenews/analytics.hpp>
#include <crimenews/classify.hpp>
#include <crimenews/corpus.hpp>
#include <crimenews/error.hpp>
#include <crimenews/geodate.hpp>
#include <crimenews/lexicon.hpp>
#include <crimenews/maprender.hpp>
#include <crimenews/similarity.hpp>
#include <crimenews/text.hpp>
#include <crimenews/textpipe.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <unistd.h>

namespace crimenews {

namespace fs = std::filesystem;

struct PipelineConfig {
    fs::path corpus_dir;
    fs::path stop_words_path;
    fs::path stem_map_path;
    fs::path gazetteer_path;
    fs::path model_path;
    fs::path train_dir; // training corpus; falls back to corpus_dir
    fs::path out_dir;   // empty: subcommands print to stdout
    std::optional<std::string> background;
    std::size_t top_word_threshold = 5;
    double dup_threshold = kDefaultDuplicateThreshold;
    IdfMode idf_mode = IdfMode::smoothed;
    ZoneLevel zone_level = ZoneLevel::district;
    double canvas_w = 800.0;
    double canvas_h = 1000.0;
    RenderStyle style;
    std::vector<std::string> categories = default_categories();
    unsigned predict_month = 0; // 0: every month
    std::optional<std::string> predict_zone;
};

namespace detail {

inline double parse_double(std::string_view key, std::string_view v) {
    double out = 0.0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw Error(Errc::config, std::string(key) + ": not a number: '" + std::string(v) + "'");
    return out;
}

inline unsigned long parse_count(std::string_view key, std::string_view v) {
    unsigned long out = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw Error(Errc::config, std::string(key) + ": not a nonnegative integer: '" + std::string(v) + "'");
    return out;
}

} // namespace detail

/// Applies one `key = value` setting. Relative paths resolve against `base`.
inline void apply_setting(PipelineConfig& cfg, std::string_view key, std::string_view value,
                          const fs::path& base = {}) {
    const auto v = text::trim(value);
    auto path = [&] {
        fs::path p{std::string(v)};
        return (p.is_relative() && !base.empty()) ? base / p : p;
    };
    if (key == "corpus_dir") cfg.corpus_dir = path();
    else if (key == "stop_words") cfg.stop_words_path = path();
    else if (key == "stem_map") cfg.stem_map_path = path();
    else if (key == "gazetteer") cfg.gazetteer_path = path();
    else if (key == "model") cfg.model_path = path();
    else if (key == "train_dir") cfg.train_dir = path();
    else if (key == "out_dir") cfg.out_dir = path();
    else if (key == "background") cfg.background = std::string(v);
    else if (key == "top_word_threshold") cfg.top_word_threshold = detail::parse_count(key, v);
    else if (key == "dup_threshold") cfg.dup_threshold = detail::parse_double(key, v);
    else if (key == "idf_mode") {
        if (v == "smoothed") cfg.idf_mode = IdfMode::smoothed;
        else if (v == "plain") cfg.idf_mode = IdfMode::plain;
        else throw Error(Errc::config, "idf_mode must be smoothed or plain");
    } else if (key == "zone_level") {
        if (v == "district") cfg.zone_level = ZoneLevel::district;
        else if (v == "thana") cfg.zone_level = ZoneLevel::thana;
        else throw Error(Errc::config, "zone_level must be district or thana");
    } else if (key == "canvas") {
        const auto x = v.find('x');
        if (x == std::string_view::npos) throw Error(Errc::config, "canvas must look like 800x1000");
        cfg.canvas_w = detail::parse_double(key, v.substr(0, x));
        cfg.canvas_h = detail::parse_double(key, v.substr(x + 1));
    } else if (key == "r_min") cfg.style.r_min = detail::parse_double(key, v);
    else if (key == "r_step") cfg.style.step = detail::parse_double(key, v);
    else if (key == "r_max") cfg.style.r_max = detail::parse_double(key, v);
    else if (key == "ramp_low" || key == "ramp_high") {
        const auto c = Rgb::parse(v);
        if (!c) throw Error(Errc::config, std::string(key) + " must be #RRGGBB");
        (key == "ramp_low" ? cfg.style.low : cfg.style.high) = *c;
    } else if (key == "categories") {
        cfg.categories.clear();
        for (auto c : text::split(v, ','))
            if (const auto t = text::trim(c); !t.empty()) cfg.categories.emplace_back(t);
    } else if (key == "predict_month") cfg.predict_month = static_cast<unsigned>(detail::parse_count(key, v));
    else if (key == "predict_zone") cfg.predict_zone = std::string(v);
    else throw Error(Errc::config, "unknown setting '" + std::string(key) + "'");
}

/// Flat `key = value` file; '#' starts a comment line.
inline void apply_config_text(PipelineConfig& cfg, std::string_view data, const fs::path& base = {}) {
    std::size_t lineno = 0;
    for (auto raw : text::lines(text::strip_bom(data))) {
        ++lineno;
        const auto line = text::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw Error(Errc::config, "config line " + std::to_string(lineno) + ": expected key = value", lineno);
        apply_setting(cfg, text::trim(line.substr(0, eq)), line.substr(eq + 1), base);
    }
}

inline void load_config_file(PipelineConfig& cfg, const fs::path& path) {
    std::string data;
    try {
        data = text::read_file(path);
    } catch (const Error& e) {
        throw Error(Errc::config, e.what());
    }
    apply_config_text(cfg, data, path.parent_path());
}

inline void validate(const PipelineConfig& cfg) {
    if (!(cfg.dup_threshold >= 0.0 && cfg.dup_threshold <= 1.0))
        throw Error(Errc::config, "dup_threshold must lie in [0, 1]");
    if (!(cfg.canvas_w > 0.0 && cfg.canvas_h > 0.0)) throw Error(Errc::config, "canvas must be positive");
    if (!(cfg.style.r_min >= 0.0 && cfg.style.step >= 0.0 && cfg.style.r_max >= cfg.style.r_min))
        throw Error(Errc::config, "render radii must satisfy 0 <= r_min <= r_max and r_step >= 0");
    if (cfg.categories.empty()) throw Error(Errc::config, "no categories configured");
    if (cfg.predict_month > 12) throw Error(Errc::config, "predict_month must be 1..12 (or 0 for all)");
}

inline void require_file(const fs::path& p, std::string_view what) {
    if (p.empty()) throw Error(Errc::config, std::string(what) + " is not set");
    if (!fs::is_regular_file(p)) throw Error(Errc::config, std::string(what) + " not found: " + p.string());
}

inline void require_dir(const fs::path& p, std::string_view what) {
    if (p.empty()) throw Error(Errc::config, std::string(what) + " is not set");
    if (!fs::is_directory(p)) throw Error(Errc::config, std::string(what) + " not found: " + p.string());
}

/// A library error tagged with the stage that raised it.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const Error& cause)
        : std::runtime_error(stage + ": " + cause.what()), stage_(std::move(stage)), code_(cause.code()) {}

    const std::string& stage() const noexcept { return stage_; }
    Errc code() const noexcept { return code_; }

private:
    std::string stage_;
    Errc code_;
};

template <class F>
auto in_stage(std::string stage, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        throw StageError(std::move(stage), e);
    }
}

/// Writes through a temporary sibling and renames it into place.
inline void write_atomic(const fs::path& path, std::string_view content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Errc::io, "cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw Error(Errc::io, "write failed on " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(Errc::io, "cannot move " + tmp.string() + " to " + path.string());
    }
}

// ---------------------------------------------------------------------------
// Stages

struct Corpus {
    std::vector<RawRecord> records;
    std::vector<Document> docs; // docs[i].id == i, parallel to records
    std::size_t skipped = 0;
};

inline Corpus ingest(const fs::path& dir, bool require_documents) {
    return in_stage("ingest", [&] {
        auto loaded = load_corpus(dir);
        if (require_documents && loaded.records.empty())
            throw Error(Errc::empty_collection, "no parseable records in " + dir.string());
        Corpus c;
        c.docs = to_documents(loaded.records);
        c.records = std::move(loaded.records);
        c.skipped = loaded.skipped;
        return c;
    });
}

inline Lexicon load_lexicon(const PipelineConfig& cfg) {
    return in_stage("lexicon", [&] {
        return Lexicon{load_stop_words(cfg.stop_words_path), load_stem_map(cfg.stem_map_path)};
    });
}

inline Gazetteer load_gazetteer_stage(const PipelineConfig& cfg) {
    return in_stage("gazetteer", [&] { return load_gazetteer(cfg.gazetteer_path); });
}

inline void normalize_all(std::vector<Document>& docs, const Lexicon& lex) {
    for (auto& d : docs) normalize_document(d, lex);
}

/// Maps a crawler CATEGORY value to a configured label: the label itself
/// (ASCII case-insensitive) or one of the Bangla section names.
inline std::optional<std::string> label_for_hint(std::string_view hint, const std::vector<std::string>& categories) {
    static const std::map<std::string, std::string, std::less<>> aliases{
        {"অপরাধ", "crime"},         {"খেলা", "sports"},       {"খেলাধুলা", "sports"},
        {"বিনোদন", "entertainment"}, {"প্রযুক্তি", "technology"}, {"তথ্যপ্রযুক্তি", "technology"},
        {"অন্যান্য", "others"},
    };
    const auto h = text::trim(hint);
    std::string label = text::ascii_lower(h);
    if (const auto it = aliases.find(h); it != aliases.end()) label = it->second;
    for (const auto& c : categories)
        if (c == label) return c;
    return std::nullopt;
}

struct TrainingResult {
    NBModel model;
    FeatureVocabulary vocab;
    std::size_t documents = 0;
    std::size_t unlabeled = 0;
};

inline TrainingResult train_from_corpus(const PipelineConfig& cfg, const Lexicon& lex) {
    auto corpus = ingest(cfg.train_dir.empty() ? cfg.corpus_dir : cfg.train_dir, true);
    normalize_all(corpus.docs, lex);
    return in_stage("train", [&] {
        TrainingResult r;
        std::vector<LabeledDocument> labeled;
        for (const auto& d : corpus.docs) {
            if (auto label = label_for_hint(d.category_hint, cfg.categories))
                labeled.push_back({&d, *label});
            else
                ++r.unlabeled;
        }
        r.documents = labeled.size();
        r.vocab = extract_top_words(labeled, lex, cfg.top_word_threshold);
        r.model = train(labeled, r.vocab, cfg.categories);
        return r;
    });
}

/// Loads the saved model; when absent and a training corpus is configured,
/// trains one and saves it first.
inline NBModel obtain_model(const PipelineConfig& cfg, const Lexicon& lex) {
    if (!fs::exists(cfg.model_path) && !cfg.train_dir.empty()) {
        const auto r = train_from_corpus(cfg, lex);
        in_stage("train", [&] { write_atomic(cfg.model_path, save_model(r.model)); });
        return r.model;
    }
    return in_stage("model", [&] { return parse_model(text::read_file(cfg.model_path)); });
}

inline std::vector<Categorization> categorize_all(std::vector<Document>& docs, const NBModel& model) {
    std::vector<Categorization> out;
    out.reserve(docs.size());
    for (auto& d : docs) {
        out.push_back(categorize(model, d));
        d.category = out.back().category;
    }
    return out;
}

inline void locate_all(std::vector<Document>& docs, const Gazetteer& gaz, const Lexicon& lex) {
    for (auto& d : docs) d.location = find_location(d, gaz, lex);
}

/// Everything downstream of ingest, as far as the cube.
struct Analysis {
    Corpus corpus;
    std::vector<Categorization> categorizations;
    DedupResult dedup;
    CrimeCube cube;
    std::vector<ZoneCount> ranking;
};

enum class Depth { categorized, deduplicated, cubed };

inline Analysis analyze(const PipelineConfig& cfg, Depth depth) {
    Analysis a;
    const auto lex = load_lexicon(cfg);
    a.corpus = ingest(cfg.corpus_dir, true);
    normalize_all(a.corpus.docs, lex);
    const auto model = obtain_model(cfg, lex);
    a.categorizations = in_stage("categorize", [&] { return categorize_all(a.corpus.docs, model); });
    if (depth == Depth::categorized) return a;

    const auto gaz = load_gazetteer_stage(cfg);
    in_stage("locate", [&] { locate_all(a.corpus.docs, gaz, lex); });
    a.dedup = in_stage("dedup", [&] { return dedup(a.corpus.docs, cfg.dup_threshold, cfg.idf_mode); });
    if (depth == Depth::deduplicated) return a;

    a.cube = in_stage("cube", [&] { return build_cube(a.dedup.survivors, cfg.zone_level); });
    a.ranking = rank_zones(a.cube);
    return a;
}

// ---------------------------------------------------------------------------
// Artifact formats

namespace detail {

inline std::string fixed(double v, int precision) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
    return std::string(buf, p);
}

} // namespace detail

inline std::string format_ingest(const Corpus& c) {
    std::string out = "records=" + std::to_string(c.records.size()) + " skipped=" + std::to_string(c.skipped) + "\n";
    if (!c.docs.empty()) {
        auto first = c.docs.front().published_day, last = first;
        std::map<std::string, std::size_t> domains;
        for (const auto& d : c.docs) {
            first = std::min(first, d.published_day);
            last = std::max(last, d.published_day);
            ++domains[d.source_domain];
        }
        out += "first=" + first.to_string() + " last=" + last.to_string() + "\n";
        for (const auto& [dom, n] : domains) out += "domain " + dom + " " + std::to_string(n) + "\n";
    }
    return out;
}

inline std::string format_tokens(const std::vector<Document>& docs) {
    std::string out;
    for (const auto& d : docs) {
        out += "# " + std::to_string(d.id) + " " + d.url + "\n";
        for (const auto& t : d.tokens) out += t + "\n";
    }
    return out;
}

/// Top words with their per-category counts, one per line.
inline std::string format_top_words(const FeatureVocabulary& vocab, const std::vector<std::string>& categories) {
    std::string out;
    for (const auto& t : vocab.terms) {
        out += t;
        for (const auto& c : categories) out += " " + c + "=" + std::to_string(vocab.count(t, c));
        out += " total=" + std::to_string(vocab.total(t)) + "\n";
    }
    return out;
}

inline std::string format_categorized(const std::vector<Document>& docs, const std::vector<Categorization>& cats,
                                      const std::vector<std::string>& categories) {
    std::string out = "doc_id,published,domain,expected,predicted,margin\n";
    for (std::size_t i = 0; i < docs.size(); ++i) {
        const auto& d = docs[i];
        out += std::to_string(d.id) + "," + d.published_day.to_string() + "," + d.source_domain + "," +
               label_for_hint(d.category_hint, categories).value_or("") + "," + cats[i].category + "," +
               detail::fixed(cats[i].margin, 6) + "\n";
    }
    return out;
}

inline std::string format_locations(const std::vector<Document>& docs) {
    std::string out = "doc_id\tthana\tdistrict\n";
    for (const auto& d : docs) {
        const auto& loc = d.location;
        out += std::to_string(d.id) + "\t" + (loc && loc->thana ? loc->thana->name : "-") + "\t" +
               (loc && loc->district ? loc->district->name : "-") + "\n";
    }
    return out;
}

inline std::string format_dedup_report(const DedupResult& r) {
    std::string out;
    for (const auto& g : r.groups)
        for (const auto& [id, sim] : g.removed)
            out += std::to_string(g.survivor) + " <- " + std::to_string(id) + " (" + detail::fixed(sim, 6) + ")\n";
    out += "pairs=" + std::to_string(r.pairs_evaluated) + " groups=" + std::to_string(r.groups.size()) +
           " removed=" + std::to_string(r.removed_count()) + "\n";
    return out;
}

inline std::string format_rank(const std::vector<ZoneCount>& ranking) {
    std::uint64_t total = 0;
    for (const auto& z : ranking) total += z.count;
    std::string out = "zone,count,share\n";
    for (const auto& z : ranking)
        out += z.zone + "," + std::to_string(z.count) + "," +
               detail::fixed(total ? static_cast<double>(z.count) / static_cast<double>(total) : 0.0, 6) + "\n";
    return out;
}

inline std::vector<Prediction> predictions(const CrimeCube& cube, unsigned month,
                                           const std::optional<std::string>& zone) {
    std::vector<Prediction> out;
    std::vector<std::string> zones;
    if (zone)
        zones.push_back(*zone);
    else
        for (const auto& z : cube.zones())
            if (z != kUnknownZone) zones.push_back(z);
    for (const auto& z : zones) {
        if (month != 0) {
            out.push_back(predict(cube, month, z));
        } else {
            for (unsigned m = 1; m <= 12; ++m) out.push_back(predict(cube, m, z));
        }
    }
    return out;
}

inline std::string format_predict(const std::vector<Prediction>& rows) {
    std::string out = "zone,month,c_zm,c_tm,c_z,c_t,score\n";
    for (const auto& p : rows)
        out += p.zone + "," + std::to_string(p.month) + "," + std::to_string(p.c_zm) + "," + std::to_string(p.c_tm) +
               "," + std::to_string(p.c_z) + "," + std::to_string(p.c_t) + "," + detail::fixed(p.probability, 6) +
               "\n";
    return out;
}

inline std::string render_map(const Analysis& a, const Gazetteer& gaz, const PipelineConfig& cfg) {
    const auto kind = cfg.zone_level == ZoneLevel::district ? LocationKind::district : LocationKind::thana;
    const auto dots = layout_dots(a.ranking, gaz, cfg.canvas_w, cfg.canvas_h, cfg.style, kind);
    return render_svg(dots, cfg.background, cfg.canvas_w, cfg.canvas_h);
}

/// Replaces `<dir>/*.rec` with one serialized record per surviving document.
inline void write_survivors(const fs::path& dir, const Corpus& corpus, const DedupResult& r) {
    fs::create_directories(dir);
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".rec") fs::remove(entry.path());
    for (const auto& d : r.survivors) {
        char name[32];
        std::snprintf(name, sizeof name, "%06zu.rec", d.id);
        write_atomic(dir / name, serialize_record(corpus.records.at(d.id)));
    }
}

} // namespace crimenews
