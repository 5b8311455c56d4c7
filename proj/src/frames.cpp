#include "scimap/frames.hpp"

#include "scimap/error.hpp"

#include <algorithm>

namespace scimap {

namespace {

Frame build_frame(const PeriodSlice& slice, const RecordSet& rs, const FrameOptions& options,
                  const AttributeCatalog& first_seen, const AttributeCatalog* global) {
    Frame frame;
    frame.period = slice;
    frame.graph.threshold = options.cosine_threshold;
    if (slice.record_ids.empty()) return frame;

    const auto records = select_records(rs, slice.record_ids);
    const AttributeCatalog cat =
        global ? *global
               : build_catalog(records, options.thresholds, options.excluded_author, options.stopwords);
    if (cat.empty()) return frame;

    auto m = build_matrix(records, cat);
    if (global) {
        std::vector<std::size_t> absent;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.col_freq()[j] == 0) absent.push_back(j);
        }
        if (absent.size() == m.cols()) return frame;
        m = drop_columns(m, absent);
    }
    if (options.classes.size() < kAllClasses.size()) {
        const bool any = std::any_of(m.columns().begin(), m.columns().end(), [&](const Attribute& a) {
            return std::find(options.classes.begin(), options.classes.end(), a.cls) != options.classes.end();
        });
        if (!any) return frame;
        m = submatrix(m, options.classes);
    }

    frame.graph = build_graph(m, options.cosine_threshold);
    for (auto& node : frame.graph.nodes) {
        // Report the corpus-wide first year, not the per-period one.
        const auto idx = first_seen.find(node.cls, node.label);
        node.first_year = idx ? first_seen.attributes[*idx].first_year : std::nullopt;
        frame.is_new.push_back(node.first_year && *node.first_year >= slice.start_year &&
                               *node.first_year < slice.end_year);
    }

    const auto layout = kk_layout(frame.graph, options.layout);
    frame.positions = layout.positions;
    frame.status = layout.status;
    return frame;
}

} // namespace

FrameManifest build_frames(std::span<const PeriodSlice> slices, const RecordSet& rs, const FrameOptions& options) {
    if (slices.empty()) throw Error(ErrorKind::InvalidArgument, "no periods to build frames for");
    options.layout.validate();

    const auto first_seen = build_catalog(rs, ClassThresholds{}, options.excluded_author, options.stopwords);
    std::optional<AttributeCatalog> global;
    if (!options.rebuild_catalog) {
        global = build_catalog(rs, options.thresholds, options.excluded_author, options.stopwords);
    }

    FrameManifest manifest;
    for (const auto& slice : slices) {
        manifest.frames.push_back(build_frame(slice, rs, options, first_seen, global ? &*global : nullptr));
    }
    return manifest;
}

nlohmann::json manifest_to_json(const FrameManifest& manifest, const StyleSpec& style) {
    nlohmann::json frames = nlohmann::json::array();
    for (const auto& f : manifest.frames) {
        const auto scaled = rescale(f.positions);
        nlohmann::json nodes = nlohmann::json::array();
        for (std::size_t i = 0; i < f.graph.node_count(); ++i) {
            const auto& a = f.graph.nodes[i];
            nlohmann::json node = {
                {"id", a.key()},
                {"class", std::string(to_string(a.cls))},
                {"label", a.label},
                {"freq", a.freq},
                {"x", scaled[i].x},
                {"y", scaled[i].y},
                {"size", node_size(static_cast<double>(a.freq), style)},
                {"is_new", static_cast<bool>(f.is_new[i])},
            };
            node["first_year"] = a.first_year ? nlohmann::json(*a.first_year) : nlohmann::json(nullptr);
            nodes.push_back(std::move(node));
        }
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& e : f.graph.edges) {
            edges.push_back({
                {"source", f.graph.nodes[e.source].key()},
                {"target", f.graph.nodes[e.target].key()},
                {"weight", e.weight},
            });
        }
        frames.push_back({
            {"label", f.period.label()},
            {"start_year", f.period.start_year},
            {"end_year", f.period.end_year},
            {"records", f.period.record_ids.size()},
            {"cosine_threshold", f.graph.threshold},
            {"layout_status", std::string(to_string(f.status))},
            {"nodes", std::move(nodes)},
            {"edges", std::move(edges)},
        });
    }
    return {{"format", "scimap-frames"}, {"version", 1}, {"frames", std::move(frames)}};
}

} // namespace scimap
