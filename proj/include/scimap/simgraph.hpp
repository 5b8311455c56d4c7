#ifndef SCIMAP_SIMGRAPH_HPP
#define SCIMAP_SIMGRAPH_HPP

#include "scimap/attributes.hpp"
#include "scimap/occurrence.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace scimap {

struct Edge {
    std::size_t source = 0; ///< always < target
    std::size_t target = 0;
    double weight = 0.0;

    bool operator==(const Edge&) const = default;
};

/// Typed nodes joined by cosine-weighted undirected edges. Node `freq` is the
/// matrix column frequency; isolated nodes are kept.
struct HeteroGraph {
    std::vector<Attribute> nodes;
    std::vector<Edge> edges; ///< sorted by (source, target)
    double threshold = 0.0;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return edges.size(); }
};

/// Salton's cosine sum(u*v) / (|u| |v|). Throws Error(ZeroVector) if either
/// vector is all zeros and Error(InvalidArgument) on a length mismatch.
double cosine(std::span<const double> u, std::span<const double> v);

/// Cosine of two binary columns, c / sqrt(f_u f_v).
double cosine(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v);

/// Scores every column pair and keeps edges with cosine >= threshold. Pairs
/// with zero similarity are never edges, so threshold 0 means "every
/// co-occurring pair". Throws Error(InvalidArgument) for a threshold outside
/// [0, 1] and Error(ShapeError) for an empty matrix.
HeteroGraph build_graph(const OccurrenceMatrix& m, double threshold);

/// Neighbour lists, each sorted ascending.
std::vector<std::vector<std::size_t>> adjacency(const HeteroGraph& g);

/// Connected components as sorted node lists, ordered by their smallest member.
std::vector<std::vector<std::size_t>> components_by_first_member(const HeteroGraph& g);

} // namespace scimap

#endif
