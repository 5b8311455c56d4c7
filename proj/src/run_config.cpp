#include "scimap/run_config.hpp"

#include "scimap/error.hpp"
#include "text_util.hpp"

#include <algorithm>

namespace scimap {

std::string_view to_string(Preset preset) {
    switch (preset) {
    case Preset::Integrated: return "integrated";
    case Preset::Coauthor: return "coauthor";
    case Preset::Coword: return "coword";
    case Preset::Animation: return "animation";
    }
    return "integrated";
}

std::optional<Preset> parse_preset(std::string_view name) {
    for (auto p : {Preset::Integrated, Preset::Coauthor, Preset::Coword, Preset::Animation}) {
        if (name == to_string(p)) return p;
    }
    return std::nullopt;
}

RunConfig preset_config(Preset preset) {
    RunConfig cfg;
    switch (preset) {
    case Preset::Integrated:
        break;
    case Preset::Coauthor:
        cfg.classes = {AttributeClass::Author};
        cfg.cosine_threshold = 0.0;
        break;
    case Preset::Coword:
        cfg.classes = {AttributeClass::Word};
        cfg.cosine_threshold = 0.0;
        break;
    case Preset::Animation:
        cfg.thresholds = animation_thresholds();
        cfg.cosine_threshold = 0.2;
        cfg.period_width = 5;
        break;
    }
    return cfg;
}

void RunConfig::validate() const {
    if (!(cosine_threshold >= 0.0 && cosine_threshold <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "cosine threshold must lie in [0, 1]");
    }
    for (auto cls : kAllClasses) {
        if (thresholds[cls] < 1) throw Error(ErrorKind::InvalidArgument, "class minima must be >= 1");
    }
    if (classes.empty()) throw Error(ErrorKind::InvalidArgument, "at least one attribute class is required");
    if (period_width < 1) throw Error(ErrorKind::InvalidArgument, "period width must be >= 1");
    for (const auto& f : formats) {
        if (!kKnownFormats.contains(f)) throw Error(ErrorKind::InvalidArgument, "unknown format '" + f + "'");
    }
    if (factor_count < 1) throw Error(ErrorKind::InvalidArgument, "factor count must be >= 1");
    layout.validate();
    style.validate();
}

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto part = detail::trim(text.substr(pos, comma - pos));
        if (!part.empty()) parts.push_back(part);
        pos = comma + 1;
    }
    return parts;
}

template <class T>
T get_as(const nlohmann::json& value, std::string_view key) {
    try {
        return value.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw Error(ErrorKind::InvalidArgument, "config key '" + std::string(key) + "' has the wrong type");
    }
}

std::size_t get_count(const nlohmann::json& value, std::string_view key) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw Error(ErrorKind::InvalidArgument, "config key '" + std::string(key) + "' must be a nonnegative integer");
    }
    return value.get<std::size_t>();
}

void apply_layout(LayoutParams& p, const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "config key 'layout' must be an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "side") p.side = get_as<double>(value, key);
        else if (key == "spring_k") p.spring_k = get_as<double>(value, key);
        else if (key == "tol") p.tol = get_as<double>(value, key);
        else if (key == "max_outer") p.max_outer = get_count(value, key);
        else if (key == "max_inner") p.max_inner = get_count(value, key);
        else if (key == "seed") p.seed = get_as<std::uint64_t>(value, key);
        else throw Error(ErrorKind::InvalidArgument, "unknown layout key '" + key + "'");
    }
}

void apply_style(StyleSpec& s, const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "config key 'style' must be an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "s_min") s.s_min = get_as<double>(value, key);
        else if (key == "s_scale") s.s_scale = get_as<double>(value, key);
        else if (key == "new_node_color") s.new_node_color = get_as<std::string>(value, key);
        else if (key == "author_color") s.author_color = get_as<std::string>(value, key);
        else if (key == "word_color") s.word_color = get_as<std::string>(value, key);
        else if (key == "journal_color") s.journal_color = get_as<std::string>(value, key);
        else throw Error(ErrorKind::InvalidArgument, "unknown style key '" + key + "'");
    }
}

} // namespace

std::vector<AttributeClass> parse_class_list(std::string_view text) {
    std::vector<AttributeClass> out;
    for (auto part : split_commas(text)) {
        auto cls = parse_attribute_class(part);
        if (!cls) throw Error(ErrorKind::InvalidArgument, "unknown attribute class '" + std::string(part) + "'");
        if (std::find(out.begin(), out.end(), *cls) == out.end()) out.push_back(*cls);
    }
    if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty class list");
    return out;
}

std::set<std::string> parse_format_list(std::string_view text) {
    std::set<std::string> out;
    for (auto part : split_commas(text)) {
        std::string f(part);
        if (!kKnownFormats.contains(f)) throw Error(ErrorKind::InvalidArgument, "unknown format '" + f + "'");
        out.insert(std::move(f));
    }
    return out;
}

void apply_json(RunConfig& cfg, const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "preset") continue;
        if (key == "input") cfg.input = get_as<std::string>(value, key);
        else if (key == "stopwords") cfg.stopwords_path = get_as<std::string>(value, key);
        else if (key == "cosine_threshold") cfg.cosine_threshold = get_as<double>(value, key);
        else if (key == "author_min") cfg.thresholds.author = get_count(value, key);
        else if (key == "word_min") cfg.thresholds.word = get_count(value, key);
        else if (key == "journal_min") cfg.thresholds.journal = get_count(value, key);
        else if (key == "exclude_author") cfg.exclude_author = get_as<std::string>(value, key);
        else if (key == "period_start") cfg.period_start = get_as<int>(value, key);
        else if (key == "period_width") cfg.period_width = get_as<int>(value, key);
        else if (key == "period_end") cfg.period_end = get_as<int>(value, key);
        else if (key == "rebuild_catalog") cfg.rebuild_catalog = get_as<bool>(value, key);
        else if (key == "factors") cfg.factor_count = get_count(value, key);
        else if (key == "out_dir") cfg.out_dir = get_as<std::string>(value, key);
        else if (key == "seed") cfg.layout.seed = get_as<std::uint64_t>(value, key);
        else if (key == "layout") apply_layout(cfg.layout, value);
        else if (key == "style") apply_style(cfg.style, value);
        else if (key == "classes" || key == "formats") {
            std::string joined;
            if (value.is_string()) {
                joined = value.get<std::string>();
            } else if (value.is_array()) {
                for (const auto& item : value) joined += get_as<std::string>(item, key) + ",";
            } else {
                throw Error(ErrorKind::InvalidArgument, "config key '" + key + "' must be a string or array");
            }
            if (key == "classes") cfg.classes = parse_class_list(joined);
            else cfg.formats = parse_format_list(joined);
        } else {
            throw Error(ErrorKind::InvalidArgument, "unknown config key '" + key + "'");
        }
    }
}

} // namespace scimap
