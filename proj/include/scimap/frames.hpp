#ifndef SCIMAP_FRAMES_HPP
#define SCIMAP_FRAMES_HPP

#include "scimap/attributes.hpp"
#include "scimap/export.hpp"
#include "scimap/layout.hpp"
#include "scimap/occurrence.hpp"
#include "scimap/simgraph.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace scimap {

struct FrameOptions {
    ClassThresholds thresholds = animation_thresholds();
    double cosine_threshold = 0.2;
    std::optional<std::string> excluded_author;
    StopwordSet stopwords = default_stopwords();
    /// true: each period gets its own thresholded catalog. false: the catalog
    /// is built once over the whole corpus and columns absent from a period
    /// are dropped.
    bool rebuild_catalog = true;
    /// Column restriction applied to every period's matrix.
    std::vector<AttributeClass> classes{kAllClasses.begin(), kAllClasses.end()};
    LayoutParams layout;
};

struct Frame {
    PeriodSlice period;
    HeteroGraph graph;
    Positions positions;
    std::vector<bool> is_new; ///< first_year (over the whole corpus) inside this period
    LayoutStatus status = LayoutStatus::Converged;
};

struct FrameManifest {
    std::vector<Frame> frames;
};

/// Builds one network per period: catalog, matrix, cosine graph and layout.
/// Periods without records or without surviving attributes give empty frames.
/// Throws Error(InvalidArgument) when `slices` is empty.
FrameManifest build_frames(std::span<const PeriodSlice> slices, const RecordSet& rs, const FrameOptions& options);

/// {"format": "scimap-frames", "version": 1, "frames": [...]}; node ids are
/// "class:label" and stay stable across frames, coordinates are rescaled into
/// [0.05, 0.95].
nlohmann::json manifest_to_json(const FrameManifest& manifest, const StyleSpec& style);

} // namespace scimap

#endif
