#ifndef SCIMAP_ATTRIBUTES_HPP
#define SCIMAP_ATTRIBUTES_HPP

#include "scimap/wos_parser.hpp"

#include <array>
#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scimap {

/// The three variable classes of the heterogeneous map. Declaration order is
/// the catalog order.
enum class AttributeClass { Author = 0, Word = 1, Journal = 2 };

inline constexpr std::array<AttributeClass, 3> kAllClasses{
    AttributeClass::Author, AttributeClass::Word, AttributeClass::Journal};

std::string_view to_string(AttributeClass cls);
std::optional<AttributeClass> parse_attribute_class(std::string_view name);

struct Attribute {
    AttributeClass cls = AttributeClass::Author;
    std::string label;
    std::size_t freq = 0; ///< number of documents containing the attribute
    std::optional<int> first_year;

    /// Stable cross-frame identity, e.g. "word:network".
    std::string key() const;

    bool operator==(const Attribute&) const = default;
};

/// Per-class minimum document frequency.
struct ClassThresholds {
    std::size_t author = 1;
    std::size_t word = 1;
    std::size_t journal = 1;

    std::size_t operator[](AttributeClass cls) const;
    std::size_t& operator[](AttributeClass cls);

    bool operator==(const ClassThresholds&) const = default;
};

/// Thresholds for the static maps: every co-author and journal, words with
/// document frequency of at least three.
ClassThresholds static_map_thresholds();

/// Thresholds for the time-sliced frames: every class must occur more than once.
ClassThresholds animation_thresholds();

using StopwordSet = std::set<std::string, std::less<>>;

/// Fixed list of common English function words (see stopwords.cpp for the version tag).
const StopwordSet& default_stopwords();
std::string_view default_stopwords_version();

/// One lowercase word per line; blank lines and lines starting with '#' ignored.
StopwordSet load_stopwords(std::istream& in);

/// Lowercases, splits on every non-letter (bytes >= 0x80 count as letters so
/// UTF-8 words stay whole), drops tokens shorter than three code points and
/// stopwords, and collapses repeats keeping first-appearance order.
std::vector<std::string> tokenize_title(std::string_view title, const StopwordSet& stopwords);

struct AttributeCatalog {
    std::vector<Attribute> attributes; ///< Authors, Words, Journals; alphabetical within class
    ClassThresholds thresholds;
    std::optional<std::string> excluded_author;

    std::size_t size() const { return attributes.size(); }
    bool empty() const { return attributes.empty(); }
    std::size_t count(AttributeClass cls) const;
    /// Index of (cls, label) or nullopt.
    std::optional<std::size_t> find(AttributeClass cls, std::string_view label) const;
};

/// Builds the threshold-filtered variable set. `excluded_author` is normalized
/// before comparison and removed from the Author class before thresholding.
/// Throws Error(InvalidArgument) if any threshold is zero.
AttributeCatalog build_catalog(std::span<const Record> records, const ClassThresholds& thresholds,
                               const std::optional<std::string>& excluded_author,
                               const StopwordSet& stopwords);

AttributeCatalog build_catalog(const RecordSet& rs, const ClassThresholds& thresholds,
                               const std::optional<std::string>& excluded_author,
                               const StopwordSet& stopwords);

} // namespace scimap

#endif
