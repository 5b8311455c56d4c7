#ifndef SCIMAP_FACTORS_HPP
#define SCIMAP_FACTORS_HPP

#include "scimap/occurrence.hpp"
#include "scimap/simgraph.hpp"

#include <Eigen/Dense>

#include <ostream>
#include <vector>

namespace scimap {

/// Principal components of the Pearson correlation matrix (no rotation).
struct FactorResult {
    std::vector<double> eigenvalues;         ///< descending, clamped at 0
    Eigen::MatrixXd eigenvectors;            ///< p x p, column i pairs with eigenvalues[i]
    Eigen::MatrixXd loadings;                ///< eigenvectors scaled by sqrt(eigenvalue)
    std::vector<double> variance_fraction;   ///< eigenvalue / p
    std::vector<Attribute> retained;         ///< columns analysed, in matrix order
    std::vector<std::size_t> dropped_columns; ///< constant columns (indices into the input matrix)

    std::size_t p() const { return retained.size(); }
};

/// Pearson correlation of the listed matrix columns. Columns must be non-constant.
Eigen::MatrixXd correlation_matrix(const OccurrenceMatrix& m, const std::vector<std::size_t>& columns);

/// Drops constant columns, standardizes the rest and eigen-decomposes their
/// correlation matrix. Each eigenvector is signed so that its largest-magnitude
/// entry is nonnegative. Throws Error(DegenerateMatrix) when fewer than two
/// rows or fewer than two non-constant columns are available.
FactorResult factor_analysis(const OccurrenceMatrix& m);

/// Cumulative share of variance carried by the first k factors.
/// Throws Error(BadK) unless 1 <= k <= number of eigenvalues.
double variance_explained(const FactorResult& fr, std::size_t k);

/// Node partition, largest component first, ties broken by smallest member id.
std::vector<std::vector<std::size_t>> connected_components(const HeteroGraph& g);

/// CSV with `label,class,f1=<fraction>,...` header and one row of loadings per
/// retained attribute, for the first `factors` factors.
void write_factor_report(std::ostream& out, const FactorResult& fr, std::size_t factors);

} // namespace scimap

#endif
