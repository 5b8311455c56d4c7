#ifndef SCIMAP_WOS_PARSER_HPP
#define SCIMAP_WOS_PARSER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scimap {

/// One bibliographic document as read from an ISI tagged export.
struct Record {
    std::size_t id = 0;               ///< zero-based position in the source file
    std::vector<std::string> authors; ///< normalized, de-duplicated
    std::string title;
    std::string journal;              ///< normalized source name
    std::optional<int> year;

    bool operator==(const Record&) const = default;
};

struct ParseWarning {
    std::size_t line = 0; ///< 1-based line number in the input
    std::string message;

    bool operator==(const ParseWarning&) const = default;
};

struct RecordSet {
    std::vector<Record> records;
    std::vector<ParseWarning> warnings;

    bool operator==(const RecordSet&) const = default;
};

struct RecordSetStats {
    std::size_t records = 0;
    std::optional<int> first_year;
    std::optional<int> last_year;
    std::size_t journals = 0;
    std::size_t authors = 0;

    bool operator==(const RecordSetStats&) const = default;
};

inline constexpr int kMinYear = 1800;
inline constexpr int kMaxYear = 2200;

/// Lowercase, punctuation stripped, whitespace collapsed: "MOREAU A." -> "moreau a".
std::string normalize_author(std::string_view raw);

/// Lowercase, whitespace collapsed.
std::string normalize_journal(std::string_view raw);

/// Parses an ISI / Web of Science tagged plain-text export.
///
/// One record per PT...ER block. AU is multi-valued (one author per line),
/// TI and SO continuation lines are joined with a single space, and every tag
/// other than FN, VR, PT, AU, TI, SO, PY, ER, EF is skipped together with its
/// continuation lines. Missing TI/SO/AU and unparsable PY produce warnings and
/// the record is kept.
///
/// Throws Error(EmptyInput) when no PT tag occurs and Error(MalformedFile)
/// when a record is opened but never terminated by ER.
RecordSet parse_records(std::string_view text);

/// Writes records in canonical tagged format; `parse_records(render_records(rs))`
/// reproduces `rs.records` for already-normalized records.
std::string render_records(const std::vector<Record>& records);

RecordSetStats recordset_stats(const RecordSet& rs);

} // namespace scimap

#endif
