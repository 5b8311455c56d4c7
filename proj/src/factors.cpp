#include "scimap/factors.hpp"

#include "scimap/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace scimap {

Eigen::MatrixXd correlation_matrix(const OccurrenceMatrix& m, const std::vector<std::size_t>& columns) {
    const auto rows = static_cast<Eigen::Index>(m.rows());
    const auto p = static_cast<Eigen::Index>(columns.size());
    Eigen::MatrixXd z(rows, p);
    for (Eigen::Index j = 0; j < p; ++j) {
        auto col = m.column(columns[static_cast<std::size_t>(j)]);
        for (Eigen::Index i = 0; i < rows; ++i) z(i, j) = col[static_cast<std::size_t>(i)];
    }
    z.rowwise() -= z.colwise().mean();
    const Eigen::RowVectorXd scale = z.colwise().norm();
    for (Eigen::Index j = 0; j < p; ++j) {
        if (scale(j) == 0.0) throw Error(ErrorKind::DegenerateMatrix, "constant column in correlation input");
        z.col(j) /= scale(j);
    }
    Eigen::MatrixXd r = z.transpose() * z;
    // Exact unit diagonal keeps the trace identity at p.
    r.diagonal().setOnes();
    return r;
}

FactorResult factor_analysis(const OccurrenceMatrix& m) {
    if (m.rows() < 2) throw Error(ErrorKind::DegenerateMatrix, "factor analysis needs at least two documents");

    FactorResult fr;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const auto f = m.col_freq()[j];
        if (f == 0 || f == m.rows()) {
            fr.dropped_columns.push_back(j);
        } else {
            keep.push_back(j);
            fr.retained.push_back(m.columns()[j]);
        }
    }
    if (keep.size() < 2) {
        throw Error(ErrorKind::DegenerateMatrix, "fewer than two non-constant columns remain");
    }

    const Eigen::MatrixXd r = correlation_matrix(m, keep);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(r);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::DegenerateMatrix, "eigen-decomposition failed");

    // Eigen returns ascending order.
    const auto p = r.rows();
    fr.eigenvectors.resize(p, p);
    fr.loadings.resize(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        const Eigen::Index src = p - 1 - i;
        const double lambda = std::max(solver.eigenvalues()(src), 0.0);
        Eigen::VectorXd v = solver.eigenvectors().col(src);
        Eigen::Index big = 0;
        v.cwiseAbs().maxCoeff(&big);
        if (v(big) < 0.0) v = -v;

        fr.eigenvalues.push_back(lambda);
        fr.variance_fraction.push_back(lambda / static_cast<double>(p));
        fr.eigenvectors.col(i) = v;
        fr.loadings.col(i) = v * std::sqrt(lambda);
    }
    return fr;
}

double variance_explained(const FactorResult& fr, std::size_t k) {
    if (k < 1 || k > fr.eigenvalues.size()) {
        throw Error(ErrorKind::BadK, "factor count " + std::to_string(k) + " outside [1, " +
                                         std::to_string(fr.eigenvalues.size()) + "]");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) sum += fr.eigenvalues[i];
    return sum / static_cast<double>(fr.p());
}

std::vector<std::vector<std::size_t>> connected_components(const HeteroGraph& g) {
    auto comps = components_by_first_member(g);
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return comps;
}

void write_factor_report(std::ostream& out, const FactorResult& fr, std::size_t factors) {
    factors = std::min(factors, fr.eigenvalues.size());
    char buf[64];
    out << "label,class";
    for (std::size_t f = 0; f < factors; ++f) {
        std::snprintf(buf, sizeof buf, ",f%zu=%.6f", f + 1, fr.variance_fraction[f]);
        out << buf;
    }
    out << '\n';
    for (std::size_t i = 0; i < fr.retained.size(); ++i) {
        const auto& a = fr.retained[i];
        if (a.label.find_first_of(",\"") != std::string::npos) {
            out << '"';
            for (char c : a.label) out << (c == '"' ? std::string("\"\"") : std::string(1, c));
            out << '"';
        } else {
            out << a.label;
        }
        out << ',' << to_string(a.cls);
        for (std::size_t f = 0; f < factors; ++f) {
            std::snprintf(buf, sizeof buf, ",%.6f", fr.loadings(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(f)));
            out << buf;
        }
        out << '\n';
    }
}

} // namespace scimap
