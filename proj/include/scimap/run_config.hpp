#ifndef SCIMAP_RUN_CONFIG_HPP
#define SCIMAP_RUN_CONFIG_HPP

#include "scimap/attributes.hpp"
#include "scimap/export.hpp"
#include "scimap/layout.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace scimap {

/// Named recipes for the four map configurations.
enum class Preset { Integrated, Coauthor, Coword, Animation };

std::string_view to_string(Preset preset);
std::optional<Preset> parse_preset(std::string_view name);

inline const std::set<std::string> kKnownFormats{"pajek", "graphml", "svg", "frames", "factors", "csv"};

struct RunConfig {
    std::string input;
    std::optional<std::string> stopwords_path;
    ClassThresholds thresholds = static_map_thresholds();
    std::optional<std::string> exclude_author;
    double cosine_threshold = 0.2;
    std::vector<AttributeClass> classes{kAllClasses.begin(), kAllClasses.end()};
    std::optional<int> period_start;
    int period_width = 5;
    std::optional<int> period_end;
    bool rebuild_catalog = true; ///< per-period catalogs in `slice`
    std::size_t factor_count = 3; ///< loading columns in the factor report
    LayoutParams layout;
    StyleSpec style;
    std::string out_dir = ".";
    std::set<std::string> formats{"pajek", "svg"};

    /// Throws Error(InvalidArgument) on out-of-range values or unknown formats.
    void validate() const;
};

RunConfig preset_config(Preset preset);

/// Overlays keys of a JSON config object onto `cfg`. Keys mirror the long CLI
/// flags with underscores ("cosine_threshold", "word_min", ...), plus nested
/// "layout" and "style" objects. Unknown keys and wrong types throw
/// Error(InvalidArgument). The "preset" key is read by the caller, not here.
void apply_json(RunConfig& cfg, const nlohmann::json& j);

/// "author,word" -> {Author, Word}. Throws Error(InvalidArgument).
std::vector<AttributeClass> parse_class_list(std::string_view text);

/// "pajek,svg" -> {"pajek", "svg"}. Throws Error(InvalidArgument).
std::set<std::string> parse_format_list(std::string_view text);

} // namespace scimap

#endif
