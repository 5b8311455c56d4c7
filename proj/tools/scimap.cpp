// scimap: heterogeneous co-occurrence maps from ISI tagged bibliographic exports.
//
//   scimap inspect --input records.txt
//   scimap map     --input records.txt --preset integrated --exclude-author "Moreau, A"
//   scimap slice   --input records.txt --preset animation --period-start 1975 --period-end 2005
//   scimap factors --input records.txt --preset coword

#include "scimap/commands.hpp"
#include "scimap/error.hpp"
#include "scimap/run_config.hpp"

#include "CLI11.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct Flags {
    std::string input;
    std::string config;
    std::string preset;
    std::optional<double> cosine_threshold;
    std::string classes;
    std::optional<std::size_t> word_min;
    std::optional<std::size_t> author_min;
    std::optional<std::size_t> journal_min;
    std::optional<std::string> exclude_author;
    std::optional<int> period_start;
    std::optional<int> period_width;
    std::optional<int> period_end;
    std::string formats;
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> stopwords;
    std::optional<std::size_t> factors;
    bool global_catalog = false;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--input", f.input, "ISI tagged plain-text export");
    cmd->add_option("--config", f.config, "JSON run configuration (flags take precedence)");
    cmd->add_option("--preset", f.preset, "integrated | coauthor | coword | animation");
    cmd->add_option("--cosine-threshold", f.cosine_threshold, "edge cutoff in [0, 1]");
    cmd->add_option("--classes", f.classes, "comma list of author, word, journal");
    cmd->add_option("--word-min", f.word_min, "minimum document frequency for words");
    cmd->add_option("--author-min", f.author_min, "minimum document frequency for authors");
    cmd->add_option("--journal-min", f.journal_min, "minimum document frequency for journals");
    cmd->add_option("--exclude-author", f.exclude_author, "focal author removed from the author class");
    cmd->add_option("--period-start", f.period_start, "first year of the first period");
    cmd->add_option("--period-width", f.period_width, "period length in years");
    cmd->add_option("--period-end", f.period_end, "exclusive end year");
    cmd->add_option("--formats", f.formats, "comma list of pajek, graphml, svg, frames, factors, csv");
    cmd->add_option("--out-dir", f.out_dir, "output directory");
    cmd->add_option("--seed", f.seed, "layout seed");
    cmd->add_option("--stopwords", f.stopwords, "stopword list, one word per line");
    cmd->add_option("--factors", f.factors, "factors reported in the loading CSV");
    cmd->add_flag("--global-catalog", f.global_catalog, "slice: reuse the whole-corpus catalog in every period");
}

scimap::RunConfig resolve(const Flags& f, scimap::Preset default_preset) {
    nlohmann::json file_cfg = nlohmann::json::object();
    if (!f.config.empty()) {
        std::ifstream in(f.config);
        if (!in) throw scimap::Error(scimap::ErrorKind::InvalidArgument, "cannot open config '" + f.config + "'");
        try {
            file_cfg = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw scimap::Error(scimap::ErrorKind::InvalidArgument, std::string("config is not valid JSON: ") + e.what());
        }
    }

    std::string preset_name = f.preset;
    if (preset_name.empty() && file_cfg.is_object() && file_cfg.contains("preset")) {
        preset_name = file_cfg["preset"].is_string() ? file_cfg["preset"].get<std::string>() : "";
    }
    auto preset = default_preset;
    if (!preset_name.empty()) {
        auto parsed = scimap::parse_preset(preset_name);
        if (!parsed) throw scimap::Error(scimap::ErrorKind::InvalidArgument, "unknown preset '" + preset_name + "'");
        preset = *parsed;
    }

    auto cfg = scimap::preset_config(preset);
    scimap::apply_json(cfg, file_cfg);

    if (!f.input.empty()) cfg.input = f.input;
    if (f.cosine_threshold) cfg.cosine_threshold = *f.cosine_threshold;
    if (!f.classes.empty()) cfg.classes = scimap::parse_class_list(f.classes);
    if (f.word_min) cfg.thresholds.word = *f.word_min;
    if (f.author_min) cfg.thresholds.author = *f.author_min;
    if (f.journal_min) cfg.thresholds.journal = *f.journal_min;
    if (f.exclude_author) cfg.exclude_author = *f.exclude_author;
    if (f.period_start) cfg.period_start = *f.period_start;
    if (f.period_width) cfg.period_width = *f.period_width;
    if (f.period_end) cfg.period_end = *f.period_end;
    if (!f.formats.empty()) cfg.formats = scimap::parse_format_list(f.formats);
    if (f.out_dir) cfg.out_dir = *f.out_dir;
    if (f.seed) cfg.layout.seed = *f.seed;
    if (f.stopwords) cfg.stopwords_path = *f.stopwords;
    if (f.factors) cfg.factor_count = *f.factors;
    if (f.global_catalog) cfg.rebuild_catalog = false;

    if (cfg.input.empty()) throw scimap::Error(scimap::ErrorKind::InvalidArgument, "--input is required");
    cfg.validate();
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heterogeneous scientometric maps from bibliographic records"};
    app.require_subcommand(1);

    Flags flags;
    auto* inspect = app.add_subcommand("inspect", "corpus summary");
    auto* map = app.add_subcommand("map", "co-occurrence network, layout and exports");
    auto* slice = app.add_subcommand("slice", "per-period animation frames");
    auto* factors = app.add_subcommand("factors", "principal-component factor report");
    for (auto* cmd : {inspect, map, slice, factors}) add_common(cmd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return scimap::kExitUsage;
    }

    scimap::RunConfig cfg;
    try {
        auto preset = scimap::Preset::Integrated;
        if (slice->parsed()) preset = scimap::Preset::Animation;
        if (factors->parsed()) preset = scimap::Preset::Coword;
        cfg = resolve(flags, preset);
    } catch (const scimap::Error& e) {
        std::cerr << "error [config]: " << e.what() << '\n';
        return scimap::kExitUsage;
    }

    if (inspect->parsed()) return scimap::run_inspect(cfg, std::cout, std::cerr);
    if (map->parsed()) return scimap::run_map(cfg, std::cout, std::cerr);
    if (slice->parsed()) return scimap::run_slice(cfg, std::cout, std::cerr);
    return scimap::run_factors(cfg, std::cout, std::cerr);
}
