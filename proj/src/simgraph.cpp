#include "scimap/simgraph.hpp"

#include "scimap/error.hpp"

#include <cassert>
#include <cmath>
#include <deque>

namespace scimap {

double cosine(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) throw Error(ErrorKind::InvalidArgument, "cosine of vectors with different lengths");
    double dot = 0.0;
    double uu = 0.0;
    double vv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        uu += u[i] * u[i];
        vv += v[i] * v[i];
    }
    if (uu == 0.0 || vv == 0.0) throw Error(ErrorKind::ZeroVector, "cosine of a zero vector");
    // sqrt(uu) * sqrt(vv) is commutative, which keeps cosine(u, v) == cosine(v, u) exactly.
    return dot / (std::sqrt(uu) * std::sqrt(vv));
}

double cosine(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) {
    if (u.size() != v.size()) throw Error(ErrorKind::InvalidArgument, "cosine of vectors with different lengths");
    std::size_t both = 0;
    std::size_t fu = 0;
    std::size_t fv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const bool a = u[i] != 0;
        const bool b = v[i] != 0;
        fu += a;
        fv += b;
        both += a && b;
    }
    if (fu == 0 || fv == 0) throw Error(ErrorKind::ZeroVector, "cosine of a zero vector");
    return static_cast<double>(both) / std::sqrt(static_cast<double>(fu) * static_cast<double>(fv));
}

HeteroGraph build_graph(const OccurrenceMatrix& m, double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "cosine threshold must lie in [0, 1]");
    }
    if (m.cols() == 0 || m.rows() == 0) throw Error(ErrorKind::ShapeError, "cannot build a graph from an empty matrix");

    HeteroGraph g;
    g.threshold = threshold;
    g.nodes = m.columns();
    for (std::size_t j = 0; j < m.cols(); ++j) g.nodes[j].freq = m.col_freq()[j];

    // Row lists per column make the pair scan proportional to co-occurrences.
    std::vector<std::vector<std::size_t>> rows_of(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        auto col = m.column(j);
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (col[i]) rows_of[j].push_back(i);
        }
        assert(!rows_of[j].empty() && "catalog-derived columns are never empty");
        if (rows_of[j].empty()) throw Error(ErrorKind::ZeroVector, "column " + g.nodes[j].key() + " is empty");
    }

    std::vector<std::size_t> co(m.cols());
    std::vector<std::vector<std::size_t>> cols_of_row(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (auto i : rows_of[j]) cols_of_row[i].push_back(j);
    }

    for (std::size_t a = 0; a < m.cols(); ++a) {
        std::fill(co.begin() + static_cast<std::ptrdiff_t>(a), co.end(), 0);
        for (auto i : rows_of[a]) {
            for (auto b : cols_of_row[i]) {
                if (b > a) ++co[b];
            }
        }
        const auto fa = static_cast<double>(rows_of[a].size());
        for (std::size_t b = a + 1; b < m.cols(); ++b) {
            if (co[b] == 0) continue;
            const double w = static_cast<double>(co[b]) / std::sqrt(fa * static_cast<double>(rows_of[b].size()));
            if (w >= threshold) g.edges.push_back({a, b, w});
        }
    }
    return g;
}

std::vector<std::vector<std::size_t>> adjacency(const HeteroGraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.node_count());
    for (const auto& e : g.edges) {
        adj[e.source].push_back(e.target);
        adj[e.target].push_back(e.source);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

std::vector<std::vector<std::size_t>> components_by_first_member(const HeteroGraph& g) {
    const auto adj = adjacency(g);
    std::vector<bool> seen(g.node_count(), false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < g.node_count(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp;
        std::deque<std::size_t> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (auto w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace scimap
