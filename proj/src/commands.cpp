#include "scimap/commands.hpp"

#include "scimap/attributes.hpp"
#include "scimap/error.hpp"
#include "scimap/factors.hpp"
#include "scimap/frames.hpp"
#include "scimap/occurrence.hpp"
#include "scimap/simgraph.hpp"
#include "scimap/wos_parser.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace scimap {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw Error(ErrorKind::Io, "write failed for '" + path.string() + "'");
}

// Runs `body` and converts library errors into a stage-tagged report.
int guarded(std::ostream& err, const std::function<void(std::string& stage)>& body) {
    std::string stage = "config";
    try {
        body(stage);
        return kExitOk;
    } catch (const Error& e) {
        err << "error [" << stage << "]: " << e.what() << '\n';
        return (stage == "config" && e.kind() == ErrorKind::InvalidArgument) ? kExitUsage : kExitData;
    } catch (const std::exception& e) {
        err << "error [" << stage << "]: " << e.what() << '\n';
        return kExitData;
    }
}

RecordSet load_records(const RunConfig& cfg, std::ostream& err) {
    if (cfg.input.empty()) throw Error(ErrorKind::Io, "no input file given");
    auto rs = parse_records(read_file(cfg.input));
    for (const auto& w : rs.warnings) err << "warning: line " << w.line << ": " << w.message << '\n';
    return rs;
}

StopwordSet load_stopword_file(const RunConfig& cfg) {
    if (!cfg.stopwords_path) return default_stopwords();
    std::istringstream in(read_file(*cfg.stopwords_path));
    return load_stopwords(in);
}

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

bool all_classes(const std::vector<AttributeClass>& classes) {
    return classes.size() >= kAllClasses.size();
}

struct Pipeline {
    RecordSet records;
    AttributeCatalog catalog;
    OccurrenceMatrix matrix;
};

Pipeline build_matrix_stage(const RunConfig& cfg, std::string& stage, std::ostream& err) {
    Pipeline p;
    stage = "parse";
    p.records = load_records(cfg, err);
    stage = "catalog";
    p.catalog = build_catalog(p.records, cfg.thresholds, cfg.exclude_author, load_stopword_file(cfg));
    stage = "matrix";
    p.matrix = build_matrix(p.records, p.catalog);
    if (!all_classes(cfg.classes)) p.matrix = submatrix(p.matrix, cfg.classes);
    return p;
}

void print_cumulative(std::ostream& out, const FactorResult& fr) {
    const std::size_t upto = std::min<std::size_t>(10, fr.eigenvalues.size());
    for (std::size_t k = 1; k <= upto; ++k) {
        out << "k=" << k << ' ' << fmt("%.4f", variance_explained(fr, k)) << '\n';
    }
}

} // namespace

int run_inspect(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&](std::string& stage) {
        stage = "parse";
        const auto rs = load_records(cfg, err);
        const auto s = recordset_stats(rs);
        out << s.records << " records, " << s.journals << " journals, ";
        if (s.first_year) {
            out << *s.first_year << '-' << *s.last_year << '\n';
        } else {
            out << "no dated records\n";
        }
        out << s.authors << " distinct authors\n";
        out << rs.warnings.size() << " warnings\n";
    });
}

int run_map(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&](std::string& stage) {
        cfg.validate();
        auto p = build_matrix_stage(cfg, stage, err);

        stage = "graph";
        const auto g = build_graph(p.matrix, cfg.cosine_threshold);
        stage = "layout";
        const auto layout = kk_layout(g, cfg.layout);

        stage = "export";
        const fs::path dir(cfg.out_dir);
        fs::create_directories(dir);
        if (cfg.formats.contains("pajek")) {
            write_file(dir / "map.net", write_pajek(g, layout.positions, cfg.style));
            write_file(dir / "map.clu", write_clu(g));
        }
        if (cfg.formats.contains("graphml")) write_file(dir / "map.graphml", write_graphml(g, layout.positions, cfg.style));
        if (cfg.formats.contains("svg")) write_file(dir / "map.svg", render_svg(g, layout.positions, cfg.style));
        if (cfg.formats.contains("csv")) {
            std::ostringstream csv;
            write_matrix_csv(csv, p.matrix);
            write_file(dir / "map.matrix.csv", csv.str());
        }
        if (cfg.formats.contains("factors")) {
            stage = "factors";
            const auto fr = factor_analysis(p.matrix);
            std::ostringstream csv;
            write_factor_report(csv, fr, cfg.factor_count);
            write_file(dir / "map.factors.csv", csv.str());
        }
        if (cfg.formats.contains("frames")) err << "note: 'frames' output is produced by the slice command\n";

        std::size_t per_class[3] = {0, 0, 0};
        for (const auto& n : g.nodes) ++per_class[static_cast<int>(n.cls)];
        out << "nodes " << g.node_count() << " (" << per_class[0] << " authors, " << per_class[1] << " words, "
            << per_class[2] << " journals)\n";
        out << "edges " << g.edge_count() << " (cosine >= " << fmt("%.3f", cfg.cosine_threshold) << ")\n";
        out << "components " << layout.component_count << '\n';
        out << "layout " << to_string(layout.status) << ", energy " << fmt("%.6g", layout.energy) << ", iterations "
            << layout.iterations << '\n';
    });
}

int run_slice(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&](std::string& stage) {
        cfg.validate();
        stage = "parse";
        const auto rs = load_records(cfg, err);
        const auto stats = recordset_stats(rs);

        stage = "slice";
        if (!stats.first_year && (!cfg.period_start || !cfg.period_end)) {
            throw Error(ErrorKind::BadRange, "corpus has no dated records");
        }
        const int start = cfg.period_start.value_or(stats.first_year.value_or(0));
        const int end = cfg.period_end.value_or(stats.last_year.value_or(0) + 1);
        const auto report = slice_by_period(rs, start, cfg.period_width, end);
        if (report.undated.size() == rs.records.size()) throw Error(ErrorKind::BadRange, "corpus has no dated records");

        stage = "frames";
        FrameOptions opts;
        opts.thresholds = cfg.thresholds;
        opts.cosine_threshold = cfg.cosine_threshold;
        opts.excluded_author = cfg.exclude_author;
        opts.stopwords = load_stopword_file(cfg);
        opts.rebuild_catalog = cfg.rebuild_catalog;
        opts.classes = cfg.classes;
        opts.layout = cfg.layout;
        const auto manifest = build_frames(report.slices, rs, opts);

        stage = "export";
        const fs::path dir(cfg.out_dir);
        fs::create_directories(dir);
        write_file(dir / "frames.json", manifest_to_json(manifest, cfg.style).dump(2) + "\n");
        for (std::size_t i = 0; i < manifest.frames.size(); ++i) {
            const auto& f = manifest.frames[i];
            char name[64];
            std::snprintf(name, sizeof name, "frame_%02zu_%s.svg", i + 1, f.period.label().c_str());
            write_file(dir / name, render_svg(f.graph, f.positions, cfg.style, f.is_new, f.period.label()));
        }

        out << manifest.frames.size() << " frames\n";
        for (const auto& f : manifest.frames) {
            const auto fresh = std::count(f.is_new.begin(), f.is_new.end(), true);
            out << f.period.label() << ": " << f.period.record_ids.size() << " records, " << f.graph.node_count()
                << " nodes, " << f.graph.edge_count() << " edges, " << fresh << " new\n";
        }
        if (!report.undated.empty()) {
            out << "excluded " << report.undated.size() << " undated records:";
            for (auto id : report.undated) out << ' ' << id;
            out << '\n';
        }
        if (!report.out_of_range.empty()) {
            out << "excluded " << report.out_of_range.size() << " records outside " << start << '-' << end - 1 << '\n';
        }
    });
}

int run_factors(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&](std::string& stage) {
        cfg.validate();
        auto p = build_matrix_stage(cfg, stage, err);

        stage = "factors";
        const auto fr = factor_analysis(p.matrix);
        for (auto j : fr.dropped_columns) {
            err << "warning: constant column " << p.matrix.columns()[j].key() << " dropped\n";
        }

        stage = "export";
        const fs::path dir(cfg.out_dir);
        fs::create_directories(dir);
        std::ostringstream csv;
        write_factor_report(csv, fr, cfg.factor_count);
        write_file(dir / "factors.csv", csv.str());

        out << "columns analysed " << fr.p() << " (dropped " << fr.dropped_columns.size() << " constant)\n";
        print_cumulative(out, fr);
    });
}

} // namespace scimap
