#ifndef SCIMAP_EXPORT_HPP
#define SCIMAP_EXPORT_HPP

#include "scimap/layout.hpp"
#include "scimap/simgraph.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scimap {

enum class NodeShape { Ellipse, Triangle, Diamond };

std::string_view to_string(NodeShape shape);

struct StyleSpec {
    NodeShape author_shape = NodeShape::Ellipse;
    NodeShape word_shape = NodeShape::Triangle;
    NodeShape journal_shape = NodeShape::Diamond;
    double s_min = 4.0;
    double s_scale = 3.0;
    std::string author_color = "#3b6fb6";
    std::string word_color = "#d1495b";
    std::string journal_color = "#8d6a9f";
    std::string new_node_color = "green";

    NodeShape shape(AttributeClass cls) const;
    const std::string& color(AttributeClass cls) const;

    /// Throws Error(InvalidArgument) unless s_min > 0 and s_scale >= 0.
    void validate() const;
};

/// s_min + s_scale * ln(freq). Throws Error(BadFreq) for freq < 1.
double node_size(double freq, const StyleSpec& style);

/// Pajek partition code per class: 1 author, 2 word, 3 journal.
int class_code(AttributeClass cls);

/// Uniform, aspect-preserving map of `pos` into [lo, hi]^2 centred on the
/// bounding box. A single point (or coincident set) lands at the centre.
Positions rescale(std::span<const Point> pos, double lo = 0.05, double hi = 0.95);

/// Pajek .net text: `*Vertices N` with 1-based ids, quoted labels, rescaled
/// coordinates, class shape and x_fact/y_fact = node_size / s_min, then
/// `*Edges` with weights rounded to 6 decimals. LF line endings.
std::string write_pajek(const HeteroGraph& g, std::span<const Point> pos, const StyleSpec& style);

/// Companion .clu partition encoding the class of every vertex.
std::string write_clu(const HeteroGraph& g);

struct PajekVertex {
    std::size_t id = 0; ///< 1-based
    std::string label;
    double x = 0.0;
    double y = 0.0;
    std::string shape;
    double x_fact = 1.0;
    double y_fact = 1.0;
};

struct PajekEdge {
    std::size_t source = 0; ///< 1-based
    std::size_t target = 0;
    double weight = 1.0;
};

struct PajekNetwork {
    std::vector<PajekVertex> vertices;
    std::vector<PajekEdge> edges;
};

/// Reads the subset of the .net format written by write_pajek (also accepts
/// *Arcs and *Edges sections without weights). Throws Error(MalformedFile).
PajekNetwork parse_pajek(std::string_view text);

/// Reads a .clu partition into its per-vertex codes. Throws Error(MalformedFile).
std::vector<int> parse_clu(std::string_view text);

/// GraphML 1.0 document; node data: class, label, freq, x, y, size,
/// first_year (omitted when unknown); edge data: weight.
std::string write_graphml(const HeteroGraph& g, std::span<const Point> pos, const StyleSpec& style);

/// SVG 1.1 on a 1000 x 1000 canvas. One shape element per node (triangle path,
/// circle or diamond path) with radius-equivalent node_size, a label below it,
/// and edge lines of stroke width 1 + 2 * weight. Nodes flagged in `is_new`
/// (empty = none) are filled with style.new_node_color.
std::string render_svg(const HeteroGraph& g, std::span<const Point> pos, const StyleSpec& style,
                       const std::vector<bool>& is_new = {}, std::string_view title = {});

} // namespace scimap

#endif
