#include "scimap/occurrence.hpp"

#include "scimap/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace scimap {

OccurrenceMatrix::OccurrenceMatrix(std::vector<std::size_t> row_ids, std::vector<Attribute> cols,
                                   std::vector<std::uint8_t> cells_col_major)
    : row_ids_(std::move(row_ids)), cols_(std::move(cols)), cells_(std::move(cells_col_major)) {
    if (cells_.size() != row_ids_.size() * cols_.size()) {
        throw Error(ErrorKind::ShapeError, "cell count does not match rows x cols");
    }
    col_freq_.assign(cols_.size(), 0);
    for (std::size_t j = 0; j < cols_.size(); ++j) {
        auto col = column(j);
        col_freq_[j] = static_cast<std::size_t>(std::count_if(col.begin(), col.end(), [](auto v) { return v != 0; }));
    }
}

OccurrenceMatrix build_matrix(std::span<const Record> records, const AttributeCatalog& cat) {
    if (cat.empty()) throw Error(ErrorKind::ShapeError, "attribute catalog is empty");

    const std::size_t n = records.size();
    std::vector<std::uint8_t> cells(n * cat.size(), 0);
    std::vector<std::size_t> ids;
    ids.reserve(n);

    // Stopwords never reach the catalog, so tokenizing without them only adds
    // tokens that find() rejects.
    static const StopwordSet kNone;
    for (std::size_t row = 0; row < n; ++row) {
        const auto& r = records[row];
        ids.push_back(r.id);
        auto mark = [&](AttributeClass cls, std::string_view label) {
            if (auto col = cat.find(cls, label)) cells[*col * n + row] = 1;
        };
        for (const auto& a : r.authors) mark(AttributeClass::Author, a);
        for (const auto& w : tokenize_title(r.title, kNone)) mark(AttributeClass::Word, w);
        if (!r.journal.empty()) mark(AttributeClass::Journal, r.journal);
    }
    return OccurrenceMatrix(std::move(ids), cat.attributes, std::move(cells));
}

OccurrenceMatrix build_matrix(const RecordSet& rs, const AttributeCatalog& cat) {
    return build_matrix(std::span<const Record>(rs.records), cat);
}

namespace {

OccurrenceMatrix select_columns(const OccurrenceMatrix& m, const std::vector<std::size_t>& keep) {
    std::vector<Attribute> cols;
    std::vector<std::uint8_t> cells;
    cols.reserve(keep.size());
    cells.reserve(keep.size() * m.rows());
    for (auto j : keep) {
        cols.push_back(m.columns()[j]);
        auto col = m.column(j);
        cells.insert(cells.end(), col.begin(), col.end());
    }
    return OccurrenceMatrix(m.row_ids(), std::move(cols), std::move(cells));
}

} // namespace

OccurrenceMatrix submatrix(const OccurrenceMatrix& m, std::span<const AttributeClass> classes) {
    if (classes.empty()) throw Error(ErrorKind::InvalidArgument, "class subset is empty");
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (std::find(classes.begin(), classes.end(), m.columns()[j].cls) != classes.end()) keep.push_back(j);
    }
    if (keep.empty()) throw Error(ErrorKind::ShapeError, "class restriction leaves no columns");
    return select_columns(m, keep);
}

OccurrenceMatrix drop_columns(const OccurrenceMatrix& m, std::span<const std::size_t> cols) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (std::find(cols.begin(), cols.end(), j) == cols.end()) keep.push_back(j);
    }
    return select_columns(m, keep);
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

void write_matrix_csv(std::ostream& out, const OccurrenceMatrix& m) {
    out << "doc";
    for (const auto& a : m.columns()) out << ',' << csv_field(a.key());
    out << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << m.row_ids()[i];
        for (std::size_t j = 0; j < m.cols(); ++j) out << ',' << (m.cell(i, j) ? '1' : '0');
        out << '\n';
    }
}

std::string PeriodSlice::label() const {
    return std::to_string(start_year) + "-" + std::to_string(end_year - 1);
}

SliceReport slice_by_period(const RecordSet& rs, int start, int width, int end) {
    if (end <= start) {
        throw Error(ErrorKind::BadRange,
                    "period end " + std::to_string(end) + " must exceed start " + std::to_string(start));
    }
    if (width < 1) throw Error(ErrorKind::BadRange, "period width must be >= 1");

    SliceReport report;
    for (int lo = start; lo < end; lo += width) {
        report.slices.push_back({lo, std::min(lo + width, end), {}});
    }
    for (const auto& r : rs.records) {
        if (!r.year) {
            report.undated.push_back(r.id);
            continue;
        }
        if (*r.year < start || *r.year >= end) {
            report.out_of_range.push_back(r.id);
            continue;
        }
        const auto index = static_cast<std::size_t>((*r.year - start) / width);
        report.slices[index].record_ids.push_back(r.id);
    }
    return report;
}

std::vector<Record> select_records(const RecordSet& rs, std::span<const std::size_t> ids) {
    std::unordered_map<std::size_t, const Record*> by_id;
    for (const auto& r : rs.records) by_id.emplace(r.id, &r);
    std::vector<Record> out;
    out.reserve(ids.size());
    for (auto id : ids) {
        auto it = by_id.find(id);
        if (it == by_id.end()) throw Error(ErrorKind::InvalidArgument, "unknown record id " + std::to_string(id));
        out.push_back(*it->second);
    }
    return out;
}

} // namespace scimap
