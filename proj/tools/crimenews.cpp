// crimenews: command-line front end for the news crime analytics pipeline.
//
// Exit status: 0 success, 1 configuration error, 2 data error.

#include <crimenews/pipeline.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace fs = std::filesystem;
using namespace crimenews;

namespace {

struct Options {
    std::string config_file;
    std::vector<std::pair<std::string, std::string>> overrides; // applied in this order after the file
    std::vector<std::string> settings;                          // --set key=value
};

void add_common(CLI::App* sub, Options& o) {
    auto flag = [&](const std::string& name, const std::string& key, const std::string& help) {
        sub->add_option_function<std::string>(
            name, [&o, key](const std::string& v) { o.overrides.emplace_back(key, v); }, help);
    };
    sub->add_option("-c,--config", o.config_file, "key = value config file");
    flag("--corpus", "corpus_dir", "directory of crawled records");
    flag("--stop-words", "stop_words", "stop list file");
    flag("--stem-map", "stem_map", "inflected/root pairs file");
    flag("--gazetteer", "gazetteer", "gazetteer CSV");
    flag("--model", "model", "Naive Bayes model file");
    flag("--train-dir", "train_dir", "labeled training corpus");
    flag("--out", "out_dir", "output directory (stdout when omitted)");
    flag("--threshold", "top_word_threshold", "top-word frequency threshold");
    flag("--dup-threshold", "dup_threshold", "duplicate similarity threshold");
    flag("--idf", "idf_mode", "smoothed or plain");
    flag("--zone-level", "zone_level", "district or thana");
    flag("--canvas", "canvas", "canvas size, WxH pixels");
    flag("--background", "background", "background image href for the map");
    sub->add_option("--set", o.settings, "any config setting as key=value");
}

PipelineConfig build_config(const Options& o) {
    PipelineConfig cfg;
    if (!o.config_file.empty()) load_config_file(cfg, o.config_file);
    for (const auto& [k, v] : o.overrides) apply_setting(cfg, k, v);
    for (const auto& s : o.settings) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw Error(Errc::config, "--set expects key=value, got '" + s + "'");
        apply_setting(cfg, text::trim(std::string_view(s).substr(0, eq)), std::string_view(s).substr(eq + 1));
    }
    validate(cfg);
    return cfg;
}

class Emitter {
public:
    explicit Emitter(fs::path dir) : dir_(std::move(dir)) {}

    void operator()(const std::string& name, const std::string& content) const {
        if (dir_.empty())
            std::cout << content;
        else
            in_stage("write", [&] { write_atomic(dir_ / name, content); });
    }

    const fs::path& dir() const { return dir_; }

private:
    fs::path dir_;
};

void require_model_source(const PipelineConfig& cfg) {
    if (cfg.model_path.empty()) throw Error(Errc::config, "model is not set");
    if (!fs::exists(cfg.model_path) && cfg.train_dir.empty())
        throw Error(Errc::config, "model not found and no train_dir to build it from: " + cfg.model_path.string());
    if (!cfg.train_dir.empty() && !fs::exists(cfg.model_path)) require_dir(cfg.train_dir, "train_dir");
}

void require_lexicon(const PipelineConfig& cfg) {
    require_file(cfg.stop_words_path, "stop_words");
    require_file(cfg.stem_map_path, "stem_map");
}

int cmd_ingest(const PipelineConfig& cfg) {
    require_dir(cfg.corpus_dir, "corpus_dir");
    const auto c = ingest(cfg.corpus_dir, false);
    Emitter(cfg.out_dir)("ingest.txt", format_ingest(c));
    return 0;
}

int cmd_tokens(const PipelineConfig& cfg) {
    require_dir(cfg.corpus_dir, "corpus_dir");
    require_lexicon(cfg);
    const auto lex = load_lexicon(cfg);
    auto c = ingest(cfg.corpus_dir, false);
    normalize_all(c.docs, lex);
    Emitter(cfg.out_dir)("tokens.txt", format_tokens(c.docs));
    return 0;
}

int cmd_train(const PipelineConfig& cfg) {
    require_dir(cfg.train_dir.empty() ? cfg.corpus_dir : cfg.train_dir, "train_dir");
    require_lexicon(cfg);
    if (cfg.model_path.empty()) throw Error(Errc::config, "model is not set");
    const auto lex = load_lexicon(cfg);
    const auto r = train_from_corpus(cfg, lex);
    in_stage("train", [&] { write_atomic(cfg.model_path, save_model(r.model)); });
    std::cerr << "trained on " << r.documents << " documents (" << r.unlabeled << " unlabeled skipped), B="
              << r.model.vocabulary_size() << ", model written to " << cfg.model_path.string() << "\n";
    Emitter(cfg.out_dir)("top_words.txt", format_top_words(r.vocab, cfg.categories));
    return 0;
}

void require_analysis_inputs(const PipelineConfig& cfg, bool needs_gazetteer) {
    require_dir(cfg.corpus_dir, "corpus_dir");
    require_lexicon(cfg);
    require_model_source(cfg);
    if (needs_gazetteer) require_file(cfg.gazetteer_path, "gazetteer");
}

int cmd_categorize(const PipelineConfig& cfg) {
    require_analysis_inputs(cfg, false);
    const auto a = analyze(cfg, Depth::categorized);
    Emitter(cfg.out_dir)("categorized.csv", format_categorized(a.corpus.docs, a.categorizations, cfg.categories));
    return 0;
}

int cmd_locate(const PipelineConfig& cfg) {
    require_dir(cfg.corpus_dir, "corpus_dir");
    require_lexicon(cfg);
    require_file(cfg.gazetteer_path, "gazetteer");
    const auto lex = load_lexicon(cfg);
    const auto gaz = load_gazetteer_stage(cfg);
    auto c = ingest(cfg.corpus_dir, false);
    in_stage("locate", [&] { locate_all(c.docs, gaz, lex); });
    Emitter(cfg.out_dir)("locations.tsv", format_locations(c.docs));
    return 0;
}

int cmd_dedup(const PipelineConfig& cfg) {
    require_dir(cfg.corpus_dir, "corpus_dir");
    require_lexicon(cfg);
    require_file(cfg.gazetteer_path, "gazetteer");
    const auto lex = load_lexicon(cfg);
    const auto gaz = load_gazetteer_stage(cfg);
    auto c = ingest(cfg.corpus_dir, true);
    normalize_all(c.docs, lex);
    in_stage("locate", [&] { locate_all(c.docs, gaz, lex); });
    const auto r = in_stage("dedup", [&] { return dedup(c.docs, cfg.dup_threshold, cfg.idf_mode); });
    const Emitter emit(cfg.out_dir);
    emit("dedup_report.txt", format_dedup_report(r));
    if (!emit.dir().empty()) in_stage("write", [&] { write_survivors(emit.dir() / "survivors", c, r); });
    return 0;
}

int cmd_rank(const PipelineConfig& cfg) {
    require_analysis_inputs(cfg, true);
    const auto a = analyze(cfg, Depth::cubed);
    Emitter(cfg.out_dir)("rank.csv", format_rank(a.ranking));
    return 0;
}

int cmd_predict(const PipelineConfig& cfg) {
    require_analysis_inputs(cfg, true);
    const auto a = analyze(cfg, Depth::cubed);
    const auto rows = in_stage("predict", [&] { return predictions(a.cube, cfg.predict_month, cfg.predict_zone); });
    Emitter(cfg.out_dir)("predict.csv", format_predict(rows));
    return 0;
}

int cmd_render(const PipelineConfig& cfg) {
    require_analysis_inputs(cfg, true);
    const auto a = analyze(cfg, Depth::cubed);
    const auto gaz = load_gazetteer_stage(cfg);
    Emitter(cfg.out_dir)("map.svg", in_stage("render", [&] { return render_map(a, gaz, cfg); }));
    return 0;
}

int cmd_pipeline(PipelineConfig cfg) {
    if (cfg.out_dir.empty()) cfg.out_dir = "out";
    require_analysis_inputs(cfg, true);
    const auto a = analyze(cfg, Depth::cubed);
    const auto gaz = load_gazetteer_stage(cfg);
    const auto rows = in_stage("predict", [&] { return predictions(a.cube, cfg.predict_month, cfg.predict_zone); });
    const auto svg = in_stage("render", [&] { return render_map(a, gaz, cfg); });

    const Emitter emit(cfg.out_dir);
    emit("ingest.txt", format_ingest(a.corpus));
    emit("categorized.csv", format_categorized(a.corpus.docs, a.categorizations, cfg.categories));
    emit("locations.tsv", format_locations(a.corpus.docs));
    emit("dedup_report.txt", format_dedup_report(a.dedup));
    in_stage("write", [&] { write_survivors(cfg.out_dir / "survivors", a.corpus, a.dedup); });
    emit("rank.csv", format_rank(a.ranking));
    emit("predict.csv", format_predict(rows));
    emit("map.svg", svg);
    std::cerr << "pipeline: " << a.corpus.docs.size() << " documents, " << a.dedup.removed_count()
              << " duplicates removed, " << a.ranking.size() << " ranked zones -> " << cfg.out_dir.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"News crime analytics: categorize, deduplicate, locate, rank and predict"};
    app.require_subcommand(1);
    Options opts;
    unsigned month = 0;
    std::string zone;

    struct Command {
        const char* name;
        const char* help;
        int (*run)(const PipelineConfig&);
    };
    static const Command commands[] = {
        {"ingest", "parse the corpus and report statistics", cmd_ingest},
        {"tokens", "dump normalized tokens per document", cmd_tokens},
        {"train", "build the top-word vocabulary and Naive Bayes model", cmd_train},
        {"categorize", "label every document", cmd_categorize},
        {"locate", "resolve thana and district per document", cmd_locate},
        {"dedup", "report cross-source duplicates and write survivors", cmd_dedup},
        {"rank", "rank zones by crime count", cmd_rank},
        {"predict", "occurrence score per zone and month", cmd_predict},
        {"render", "SVG dot map of crime intensity", cmd_render},
        {"pipeline", "run every stage and write all artifacts", [](const PipelineConfig& c) { return cmd_pipeline(c); }},
    };
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        add_common(sub, opts);
        if (std::string_view(c.name) == "predict" || std::string_view(c.name) == "pipeline") {
            sub->add_option("--month", month, "month 1..12 (default: all)")->check(CLI::Range(1u, 12u));
            sub->add_option("--zone", zone, "single zone to score");
        }
        subs.emplace_back(sub, &c);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        auto cfg = build_config(opts);
        if (month != 0) cfg.predict_month = month;
        if (!zone.empty()) cfg.predict_zone = zone;
        for (const auto& [sub, cmd] : subs)
            if (sub->parsed()) return cmd->run(cfg);
    } catch (const StageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::config ? 1 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::config ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
