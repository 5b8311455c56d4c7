#include "scimap/commands.hpp"
#include "scimap/error.hpp"
#include "scimap/run_config.hpp"
#include "scimap/wos_parser.hpp"

#include "support/corpus.hpp"
#include "support/tempdir.hpp"

#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace scimap;
using testing::TempDir;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

template <class Fn>
Run run(Fn fn, const RunConfig& cfg) {
    std::ostringstream out, err;
    Run r;
    r.code = fn(cfg, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

RunConfig corpus_config(const TempDir& dir, Preset preset = Preset::Integrated) {
    const auto input = dir / "corpus.txt";
    if (!std::filesystem::exists(input)) testing::write_text(input, render_records(testing::focal_author_corpus()));
    auto cfg = preset_config(preset);
    cfg.input = input;
    cfg.exclude_author = testing::kFocalAuthor;
    cfg.out_dir = dir / "out";
    return cfg;
}

// Runs the installed binary through the shell; returns its exit status.
int shell(const std::string& args, const TempDir& dir) {
    const std::string cmd = std::string("\"") + SCIMAP_BINARY + "\" " + args + " > \"" + (dir / "stdout.txt") +
                            "\" 2> \"" + (dir / "stderr.txt") + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("inspect summarises the 65-record fixture") {
    TempDir dir;
    const auto r = run(run_inspect, corpus_config(dir));
    CHECK(r.code == kExitOk);
    CHECK(r.out == "65 records, 26 journals, 1975-2009\n49 distinct authors\n0 warnings\n");
}

TEST_CASE("inspect on a one-record file and on an empty file") {
    TempDir dir;
    RunConfig cfg;
    cfg.input = dir / "one.txt";
    testing::write_text(cfg.input, "PT J\nAU Law, J\nTI Translation\nSO Minerva\nPY 1986\nER\n");
    auto r = run(run_inspect, cfg);
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("1 records, 1 journals, 1986-1986\n", 0) == 0);

    cfg.input = dir / "empty.txt";
    testing::write_text(cfg.input, "");
    r = run(run_inspect, cfg);
    CHECK(r.code == kExitData);
    CHECK(r.err.find("error [parse]") != std::string::npos);
    CHECK(r.err.find("EmptyInput") != std::string::npos);

    cfg.input = dir / "missing.txt";
    CHECK(run(run_inspect, cfg).code == kExitData);
}

TEST_CASE("map with the integrated preset builds the 101-node network") {
    TempDir dir;
    auto cfg = corpus_config(dir);
    cfg.formats = {"pajek", "graphml", "svg", "csv", "factors"};
    const auto r = run(run_map, cfg);
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.rfind("nodes 101 (48 authors, 27 words, 26 journals)\n", 0) == 0);
    CHECK(r.out.find("edges ") != std::string::npos);
    CHECK(r.out.find("(cosine >= 0.200)") != std::string::npos);
    for (const char* f : {"map.net", "map.clu", "map.graphml", "map.svg", "map.matrix.csv", "map.factors.csv"})
        CHECK(std::filesystem::exists(dir / ("out/" + std::string(f))));
    CHECK(testing::read_text(dir / "out/map.net").rfind("*Vertices 101\n", 0) == 0);
}

TEST_CASE("single-class presets") {
    TempDir dir;
    auto r = run(run_map, corpus_config(dir, Preset::Coauthor));
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.rfind("nodes 48 (48 authors, 0 words, 0 journals)\n", 0) == 0);
    CHECK(r.out.find("(cosine >= 0.000)") != std::string::npos);

    r = run(run_map, corpus_config(dir, Preset::Coword));
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.rfind("nodes 27 (0 authors, 27 words, 0 journals)\n", 0) == 0);
}

TEST_CASE("map output is byte-identical across runs") {
    TempDir dir;
    auto cfg = corpus_config(dir);
    cfg.formats = {"pajek", "graphml", "svg", "csv"};
    cfg.out_dir = dir / "a";
    const auto first = run(run_map, cfg);
    cfg.out_dir = dir / "b";
    const auto second = run(run_map, cfg);
    REQUIRE(first.code == kExitOk);
    CHECK(first.out == second.out);
    for (const char* f : {"map.net", "map.clu", "map.graphml", "map.svg", "map.matrix.csv"}) {
        const auto a = testing::read_text(dir / ("a/" + std::string(f)));
        CHECK(!a.empty());
        CHECK(a == testing::read_text(dir / ("b/" + std::string(f))));
    }
}

TEST_CASE("slice writes one frame per period") {
    TempDir dir;
    auto cfg = corpus_config(dir, Preset::Animation);
    cfg.period_start = 1975;
    cfg.period_end = 2005;
    const auto r = run(run_slice, cfg);
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.rfind("6 frames\n1975-1979: ", 0) == 0);
    CHECK(std::filesystem::exists(dir / "out/frames.json"));
    CHECK(std::filesystem::exists(dir / "out/frame_01_1975-1979.svg"));
    CHECK(std::filesystem::exists(dir / "out/frame_06_2000-2004.svg"));
    CHECK(r.out.find("records outside 1975-2004") != std::string::npos);

    cfg.period_start = 2005;
    cfg.period_end = 2010;
    const auto last = run(run_slice, cfg);
    REQUIRE(last.code == kExitOk);
    CHECK(last.out.rfind("1 frames\n2005-2009: ", 0) == 0);

    cfg.period_start = 2000;
    cfg.period_end = 1990;
    const auto bad = run(run_slice, cfg);
    CHECK(bad.code == kExitData);
    CHECK(bad.err.find("BadRange") != std::string::npos);
}

TEST_CASE("slice on a corpus without dated records fails with a data error") {
    TempDir dir;
    RunConfig cfg = preset_config(Preset::Animation);
    cfg.input = dir / "undated.txt";
    testing::write_text(cfg.input, "PT J\nAU Law, J\nTI Translation\nSO Minerva\nER\n");
    cfg.out_dir = dir / "out";
    const auto r = run(run_slice, cfg);
    CHECK(r.code == kExitData);
    CHECK(r.err.find("error [slice]") != std::string::npos);
}

TEST_CASE("factors: rank-1 fixture and the 27-word restriction") {
    TempDir dir;
    RunConfig cfg = preset_config(Preset::Coword);
    cfg.input = dir / "rank1.txt";
    testing::write_text(cfg.input, render_records(testing::rank_one_corpus()));
    cfg.out_dir = dir / "out";
    auto r = run(run_factors, cfg);
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("k=1 1.0000\n") != std::string::npos);
    CHECK(std::filesystem::exists(dir / "out/factors.csv"));

    r = run(run_factors, corpus_config(dir, Preset::Coword));
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.rfind("columns analysed 27 (dropped 0 constant)\n", 0) == 0);
    std::size_t lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 11);

    // a single-column restriction is degenerate
    cfg = corpus_config(dir, Preset::Coword);
    cfg.thresholds.word = 40;
    r = run(run_factors, cfg);
    CHECK(r.code == kExitData);
}

TEST_CASE("config JSON overlays presets; unknown keys are rejected") {
    auto cfg = preset_config(Preset::Integrated);
    apply_json(cfg, nlohmann::json::parse(R"({
        "cosine_threshold": 0.35, "word_min": 4, "classes": ["word", "journal"],
        "formats": ["graphml"], "layout": {"seed": 9, "side": 2.0},
        "style": {"new_node_color": "#00ff00"}, "exclude_author": "Moreau, A",
        "period_start": 1980, "period_width": 3, "preset": "coword"})"));
    CHECK(cfg.cosine_threshold == 0.35);
    CHECK(cfg.thresholds.word == 4);
    CHECK(cfg.thresholds.author == 1);
    CHECK(cfg.classes == std::vector<AttributeClass>{AttributeClass::Word, AttributeClass::Journal});
    CHECK(cfg.formats == std::set<std::string>{"graphml"});
    CHECK(cfg.layout.seed == 9);
    CHECK(cfg.layout.side == 2.0);
    CHECK(cfg.style.new_node_color == "#00ff00");
    CHECK(cfg.exclude_author == "Moreau, A");
    CHECK(cfg.period_start == 1980);
    CHECK(cfg.period_width == 3);

    CHECK_THROWS_AS(apply_json(cfg, nlohmann::json::parse(R"({"cosine": 0.2})")), Error);
    CHECK_THROWS_AS(apply_json(cfg, nlohmann::json::parse(R"({"word_min": "three"})")), Error);
    CHECK_THROWS_AS(parse_format_list("pajek,png"), Error);
    CHECK_THROWS_AS(parse_class_list("authors,topics"), Error);

    auto bad = preset_config(Preset::Integrated);
    bad.cosine_threshold = 1.5;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad.input = "whatever";
    std::ostringstream out, err;
    CHECK(run_map(bad, out, err) == kExitUsage);
}

TEST_CASE("preset table") {
    const auto anim = preset_config(Preset::Animation);
    CHECK(anim.thresholds.author == 2);
    CHECK(anim.thresholds.word == 2);
    CHECK(anim.thresholds.journal == 2);
    CHECK(anim.cosine_threshold == 0.2);
    CHECK(anim.period_width == 5);
    const auto integrated = preset_config(Preset::Integrated);
    CHECK(integrated.thresholds.author == 1);
    CHECK(integrated.thresholds.word == 3);
    CHECK(integrated.thresholds.journal == 1);
    CHECK(integrated.cosine_threshold == 0.2);
    CHECK(integrated.classes.size() == 3);
    CHECK(parse_preset("coauthor") == Preset::Coauthor);
    CHECK_FALSE(parse_preset("figure1").has_value());
}

TEST_CASE("binary: exit codes and flag precedence") {
    TempDir dir;
    const auto corpus = dir / "corpus.txt";
    testing::write_text(corpus, render_records(testing::focal_author_corpus()));
    testing::write_text(dir / "empty.txt", "");
    testing::write_text(dir / "cfg.json", R"({"preset": "coword", "cosine_threshold": 0.5})");

    CHECK(shell("inspect --input \"" + corpus + "\"", dir) == 0);
    CHECK(testing::read_text(dir / "stdout.txt").rfind("65 records, 26 journals, 1975-2009\n", 0) == 0);

    CHECK(shell("inspect --input \"" + (dir / "empty.txt") + "\"", dir) == 2);
    CHECK(shell("inspect", dir) == 1);
    CHECK(testing::read_text(dir / "stderr.txt").find("error [config]") != std::string::npos);
    CHECK(shell("", dir) == 1);
    CHECK(shell("map --input \"" + corpus + "\" --bogus", dir) == 1);
    CHECK(shell("map --input \"" + corpus + "\" --preset figure1", dir) == 1);
    CHECK(shell("map --input \"" + corpus + "\" --cosine-threshold 2", dir) == 1);

    const auto out = dir / "out";
    CHECK(shell("map --input \"" + corpus + "\" --config \"" + (dir / "cfg.json") + "\" --cosine-threshold 0.3 --out-dir \"" +
                    out + "\"",
                dir) == 0);
    const auto report = testing::read_text(dir / "stdout.txt");
    CHECK(report.rfind("nodes 27 (0 authors, 27 words, 0 journals)\n", 0) == 0);
    CHECK(report.find("(cosine >= 0.300)") != std::string::npos);

    CHECK(shell("map --input \"" + corpus + "\" --exclude-author \"Moreau, A\" --out-dir \"" + out + "\"", dir) == 0);
    CHECK(testing::read_text(dir / "stdout.txt").rfind("nodes 101 (48 authors, 27 words, 26 journals)\n", 0) == 0);

    CHECK(shell("slice --input \"" + corpus + "\" --exclude-author \"Moreau, A\" --period-start 1975 --period-end 2005 --out-dir \"" +
                    out + "\"",
                dir) == 0);
    CHECK(testing::read_text(dir / "stdout.txt").rfind("6 frames\n", 0) == 0);

    CHECK(shell("factors --input \"" + corpus + "\" --out-dir \"" + out + "\"", dir) == 0);
    CHECK(testing::read_text(dir / "stdout.txt").rfind("columns analysed 27", 0) == 0);
}
