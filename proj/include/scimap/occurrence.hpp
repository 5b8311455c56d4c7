#ifndef SCIMAP_OCCURRENCE_HPP
#define SCIMAP_OCCURRENCE_HPP

#include "scimap/attributes.hpp"
#include "scimap/wos_parser.hpp"

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace scimap {

/// Binary documents x attributes incidence matrix, stored column-major since
/// every consumer (cosine, correlation) walks columns.
class OccurrenceMatrix {
public:
    OccurrenceMatrix() = default;
    OccurrenceMatrix(std::vector<std::size_t> row_ids, std::vector<Attribute> cols,
                     std::vector<std::uint8_t> cells_col_major);

    std::size_t rows() const { return row_ids_.size(); }
    std::size_t cols() const { return cols_.size(); }

    const std::vector<std::size_t>& row_ids() const { return row_ids_; }
    const std::vector<Attribute>& columns() const { return cols_; }
    const std::vector<std::size_t>& col_freq() const { return col_freq_; }

    bool cell(std::size_t row, std::size_t col) const { return cells_[col * rows() + row] != 0; }
    std::span<const std::uint8_t> column(std::size_t col) const {
        return {cells_.data() + col * rows(), rows()};
    }

private:
    std::vector<std::size_t> row_ids_;
    std::vector<Attribute> cols_;
    std::vector<std::uint8_t> cells_;
    std::vector<std::size_t> col_freq_;
};

/// cell(d, a) = 1 iff record d contains attribute a. Rows follow `records`
/// order and carry each record's id. Throws Error(ShapeError) for an empty catalog.
OccurrenceMatrix build_matrix(std::span<const Record> records, const AttributeCatalog& cat);
OccurrenceMatrix build_matrix(const RecordSet& rs, const AttributeCatalog& cat);

/// Restricts columns to `classes`, keeping column order. Throws
/// Error(InvalidArgument) for an empty class set and Error(ShapeError) if no
/// column survives.
OccurrenceMatrix submatrix(const OccurrenceMatrix& m, std::span<const AttributeClass> classes);

/// Same matrix without the listed columns; col_freq carried over.
OccurrenceMatrix drop_columns(const OccurrenceMatrix& m, std::span<const std::size_t> cols);

/// Header `doc,class:label,...`, then one row of 0/1 per document id.
void write_matrix_csv(std::ostream& out, const OccurrenceMatrix& m);

/// Half-open year window [start_year, end_year).
struct PeriodSlice {
    int start_year = 0;
    int end_year = 0;
    std::vector<std::size_t> record_ids;

    /// "2005-2009" style label (inclusive last year).
    std::string label() const;

    bool operator==(const PeriodSlice&) const = default;
};

struct SliceReport {
    std::vector<PeriodSlice> slices;
    std::vector<std::size_t> undated;      ///< records without a year
    std::vector<std::size_t> out_of_range; ///< dated, but outside [start, end)
};

/// Consecutive windows of `width` years covering [start, end); the last one is
/// shorter when the span is not a multiple of `width`. Throws Error(BadRange)
/// when end <= start or width < 1.
SliceReport slice_by_period(const RecordSet& rs, int start, int width, int end);

/// Records of `rs` whose ids are listed, in the given order.
std::vector<Record> select_records(const RecordSet& rs, std::span<const std::size_t> ids);

} // namespace scimap

#endif
