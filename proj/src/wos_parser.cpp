#include "scimap/wos_parser.hpp"

#include "scimap/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace scimap {

namespace {

enum class Field { None, Skip, Author, Title, Source, Year };

bool is_tag_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// A tag line has two tag characters in columns 1-2 followed by a blank or EOL.
bool is_tag_line(std::string_view line) {
    if (line.size() < 2 || !is_tag_char(line[0]) || !is_tag_char(line[1])) return false;
    return line.size() == 2 || line[2] == ' ' || line[2] == '\t';
}

bool is_continuation(std::string_view line) {
    return !line.empty() && (line[0] == ' ' || line[0] == '\t');
}

std::optional<int> parse_year(std::string_view value) {
    int year = 0;
    const auto* first = value.data();
    const auto* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, year);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    if (year < kMinYear || year > kMaxYear) return std::nullopt;
    return year;
}

class Parser {
public:
    RecordSet run(std::string_view text) {
        if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size() && !done_) {
            const auto nl = text.find('\n', pos);
            std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            handle_line(line, line_no);
        }

        if (open_) {
            throw Error(ErrorKind::MalformedFile,
                        "record opened at line " + std::to_string(record_line_) + " has no ER terminator");
        }
        if (!saw_pt_) throw Error(ErrorKind::EmptyInput, "no PT tag found");
        return std::move(out_);
    }

private:
    void handle_line(std::string_view line, std::size_t line_no) {
        if (detail::trim(line).empty()) return;

        if (is_continuation(line)) {
            append(field_, detail::trim(line), line_no);
            return;
        }
        if (!is_tag_line(line)) {
            warn(line_no, "unrecognized line skipped");
            field_ = Field::Skip;
            return;
        }

        const std::string_view tag = line.substr(0, 2);
        const std::string_view value = line.size() > 3 ? detail::trim(line.substr(3)) : std::string_view{};

        if (tag == "FN" || tag == "VR") {
            field_ = Field::Skip;
        } else if (tag == "EF") {
            done_ = true;
        } else if (tag == "PT") {
            if (open_) {
                throw Error(ErrorKind::MalformedFile,
                            "record opened at line " + std::to_string(record_line_) + " has no ER terminator");
            }
            saw_pt_ = true;
            open_ = true;
            record_line_ = line_no;
            current_ = Record{};
            current_.id = out_.records.size();
            seen_ = {};
            field_ = Field::Skip;
        } else if (tag == "ER") {
            if (!open_) {
                warn(line_no, "ER without matching PT");
            } else {
                close_record();
            }
            field_ = Field::None;
        } else if (!open_) {
            warn(line_no, "tag " + std::string(tag) + " outside a record");
            field_ = Field::Skip;
        } else if (tag == "AU") {
            begin(Field::Author, value, line_no);
        } else if (tag == "TI") {
            begin(Field::Title, value, line_no);
        } else if (tag == "SO") {
            begin(Field::Source, value, line_no);
        } else if (tag == "PY") {
            begin(Field::Year, value, line_no);
        } else {
            field_ = Field::Skip;
        }
    }

    void begin(Field field, std::string_view value, std::size_t line_no) {
        field_ = field;
        switch (field) {
        case Field::Author: seen_.author = true; break;
        case Field::Title: seen_.title = true; break;
        case Field::Source: seen_.source = true; break;
        case Field::Year:
            if (seen_.year) warn(line_no, "repeated PY; last value wins");
            seen_.year = true;
            raw_year_.clear();
            break;
        default: break;
        }
        append(field, value, line_no);
    }

    void append(Field field, std::string_view value, std::size_t line_no) {
        switch (field) {
        case Field::None:
            warn(line_no, "continuation line outside a field");
            break;
        case Field::Skip:
            break;
        case Field::Author: {
            auto name = normalize_author(value);
            if (name.empty()) {
                warn(line_no, "empty author name");
            } else if (std::find(current_.authors.begin(), current_.authors.end(), name) == current_.authors.end()) {
                current_.authors.push_back(std::move(name));
            }
            break;
        }
        case Field::Title:
            join_into(current_.title, value);
            break;
        case Field::Source:
            join_into(raw_source_, value);
            break;
        case Field::Year:
            join_into(raw_year_, value);
            year_line_ = line_no;
            break;
        }
    }

    static void join_into(std::string& dst, std::string_view value) {
        if (value.empty()) return;
        if (!dst.empty()) dst += ' ';
        dst += value;
    }

    void close_record() {
        current_.journal = normalize_journal(raw_source_);
        raw_source_.clear();

        if (seen_.year) {
            current_.year = parse_year(raw_year_);
            if (!current_.year) warn(year_line_, "unparsable or out-of-range PY '" + raw_year_ + "'");
        }
        raw_year_.clear();

        if (current_.title.empty()) warn(record_line_, "record without TI");
        if (current_.journal.empty()) warn(record_line_, "record without SO");
        if (current_.authors.empty()) warn(record_line_, "record without AU");

        out_.records.push_back(std::move(current_));
        current_ = Record{};
        open_ = false;
    }

    void warn(std::size_t line_no, std::string message) {
        out_.warnings.push_back({line_no, std::move(message)});
    }

    struct Seen {
        bool author = false;
        bool title = false;
        bool source = false;
        bool year = false;
    };

    RecordSet out_;
    Record current_;
    Seen seen_;
    std::string raw_source_;
    std::string raw_year_;
    std::size_t year_line_ = 0;
    std::size_t record_line_ = 0;
    Field field_ = Field::None;
    bool open_ = false;
    bool saw_pt_ = false;
    bool done_ = false;
};

} // namespace

std::string normalize_author(std::string_view raw) {
    std::string cleaned;
    cleaned.reserve(raw.size());
    for (char c : raw) {
        if (c == ',' || c == ';') {
            cleaned += ' ';
        } else if (detail::is_ascii_punct(c)) {
            continue;
        } else {
            cleaned += detail::ascii_lower(c);
        }
    }
    return detail::collapse_whitespace(cleaned);
}

std::string normalize_journal(std::string_view raw) {
    std::string lowered(raw);
    for (auto& c : lowered) c = detail::ascii_lower(c);
    return detail::collapse_whitespace(lowered);
}

RecordSet parse_records(std::string_view text) {
    return Parser{}.run(text);
}

std::string render_records(const std::vector<Record>& records) {
    std::ostringstream out;
    out << "FN Thomson Reuters Web of Science\nVR 1.0\n";
    for (const auto& r : records) {
        out << "PT J\n";
        for (std::size_t i = 0; i < r.authors.size(); ++i) {
            out << (i == 0 ? "AU " : "   ") << r.authors[i] << '\n';
        }
        if (!r.title.empty()) out << "TI " << r.title << '\n';
        if (!r.journal.empty()) out << "SO " << r.journal << '\n';
        if (r.year) out << "PY " << *r.year << '\n';
        out << "ER\n\n";
    }
    out << "EF\n";
    return out.str();
}

RecordSetStats recordset_stats(const RecordSet& rs) {
    RecordSetStats stats;
    stats.records = rs.records.size();
    std::set<std::string_view> journals;
    std::set<std::string_view> authors;
    for (const auto& r : rs.records) {
        if (!r.journal.empty()) journals.insert(r.journal);
        for (const auto& a : r.authors) authors.insert(a);
        if (r.year) {
            stats.first_year = stats.first_year ? std::min(*stats.first_year, *r.year) : *r.year;
            stats.last_year = stats.last_year ? std::max(*stats.last_year, *r.year) : *r.year;
        }
    }
    stats.journals = journals.size();
    stats.authors = authors.size();
    return stats;
}

} // namespace scimap
