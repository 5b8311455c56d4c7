#include "scimap/attributes.hpp"

#include "scimap/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace scimap {

std::string_view to_string(AttributeClass cls) {
    switch (cls) {
    case AttributeClass::Author: return "author";
    case AttributeClass::Word: return "word";
    case AttributeClass::Journal: return "journal";
    }
    return "unknown";
}

std::optional<AttributeClass> parse_attribute_class(std::string_view name) {
    std::string lowered(detail::trim(name));
    for (auto& c : lowered) c = detail::ascii_lower(c);
    if (lowered == "author" || lowered == "authors") return AttributeClass::Author;
    if (lowered == "word" || lowered == "words") return AttributeClass::Word;
    if (lowered == "journal" || lowered == "journals") return AttributeClass::Journal;
    return std::nullopt;
}

std::string Attribute::key() const {
    return std::string(to_string(cls)) + ":" + label;
}

std::size_t ClassThresholds::operator[](AttributeClass cls) const {
    switch (cls) {
    case AttributeClass::Author: return author;
    case AttributeClass::Word: return word;
    case AttributeClass::Journal: return journal;
    }
    return author;
}

std::size_t& ClassThresholds::operator[](AttributeClass cls) {
    switch (cls) {
    case AttributeClass::Author: return author;
    case AttributeClass::Word: return word;
    case AttributeClass::Journal: return journal;
    }
    return author;
}

ClassThresholds static_map_thresholds() {
    return {.author = 1, .word = 3, .journal = 1};
}

ClassThresholds animation_thresholds() {
    return {.author = 2, .word = 2, .journal = 2};
}

std::vector<std::string> tokenize_title(std::string_view title, const StopwordSet& stopwords) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t code_points = 0;

    auto flush = [&] {
        if (code_points >= 3 && !stopwords.contains(current) &&
            std::find(tokens.begin(), tokens.end(), current) == tokens.end()) {
            tokens.push_back(current);
        }
        current.clear();
        code_points = 0;
    };

    for (char c : title) {
        const auto u = static_cast<unsigned char>(c);
        const bool ascii_letter = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
        if (ascii_letter || u >= 0x80) {
            current += detail::ascii_lower(c);
            // UTF-8 continuation bytes do not start a new code point.
            if ((u & 0xC0) != 0x80) ++code_points;
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

std::size_t AttributeCatalog::count(AttributeClass cls) const {
    return static_cast<std::size_t>(
        std::count_if(attributes.begin(), attributes.end(), [cls](const Attribute& a) { return a.cls == cls; }));
}

std::optional<std::size_t> AttributeCatalog::find(AttributeClass cls, std::string_view label) const {
    // attributes are sorted by (class, label)
    auto it = std::lower_bound(attributes.begin(), attributes.end(), std::tie(cls, label),
                               [](const Attribute& a, const auto& key) {
                                   const auto& [kc, kl] = key;
                                   if (a.cls != kc) return a.cls < kc;
                                   return std::string_view(a.label) < kl;
                               });
    if (it == attributes.end() || it->cls != cls || it->label != label) return std::nullopt;
    return static_cast<std::size_t>(it - attributes.begin());
}

AttributeCatalog build_catalog(std::span<const Record> records, const ClassThresholds& thresholds,
                               const std::optional<std::string>& excluded_author,
                               const StopwordSet& stopwords) {
    for (auto cls : kAllClasses) {
        if (thresholds[cls] < 1) {
            throw Error(ErrorKind::InvalidArgument,
                        "threshold for class " + std::string(to_string(cls)) + " must be >= 1");
        }
    }

    AttributeCatalog cat;
    cat.thresholds = thresholds;
    std::optional<std::string> excluded;
    if (excluded_author) {
        excluded = normalize_author(*excluded_author);
        cat.excluded_author = excluded;
    }

    struct Tally {
        std::size_t freq = 0;
        std::optional<int> first_year;
    };
    // (class, label) ordering of std::map gives the catalog order directly.
    std::map<std::pair<AttributeClass, std::string>, Tally> tallies;

    auto count = [&](AttributeClass cls, const std::string& label, const std::optional<int>& year) {
        auto& t = tallies[{cls, label}];
        ++t.freq;
        if (year && (!t.first_year || *year < *t.first_year)) t.first_year = year;
    };

    for (const auto& r : records) {
        for (const auto& a : r.authors) {
            if (excluded && a == *excluded) continue;
            count(AttributeClass::Author, a, r.year);
        }
        for (const auto& w : tokenize_title(r.title, stopwords)) count(AttributeClass::Word, w, r.year);
        if (!r.journal.empty()) count(AttributeClass::Journal, r.journal, r.year);
    }

    for (auto& [key, tally] : tallies) {
        if (tally.freq < thresholds[key.first]) continue;
        cat.attributes.push_back({key.first, key.second, tally.freq, tally.first_year});
    }
    return cat;
}

AttributeCatalog build_catalog(const RecordSet& rs, const ClassThresholds& thresholds,
                               const std::optional<std::string>& excluded_author,
                               const StopwordSet& stopwords) {
    return build_catalog(std::span<const Record>(rs.records), thresholds, excluded_author, stopwords);
}

} // namespace scimap
