#include "scimap/export.hpp"

#include "scimap/error.hpp"
#include "text_util.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace scimap {

namespace {

constexpr double kCanvas = 1000.0;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string polygon_path(std::span<const Point> vertices) {
    std::string d;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        d += (i == 0 ? "M" : " L");
        d += num(vertices[i].x) + "," + num(vertices[i].y);
    }
    return d + " Z";
}

} // namespace

std::string render_svg(const HeteroGraph& g, std::span<const Point> pos, const StyleSpec& style,
                       const std::vector<bool>& is_new, std::string_view title) {
    style.validate();
    if (pos.size() != g.node_count()) throw Error(ErrorKind::InvalidArgument, "positions do not match node count");
    if (!is_new.empty() && is_new.size() != g.node_count()) {
        throw Error(ErrorKind::InvalidArgument, "is_new flags do not match node count");
    }
    for (const auto& p : pos) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error(ErrorKind::InvalidArgument, "non-finite position");
    }

    auto canvas = rescale(pos);
    for (auto& p : canvas) p = {p.x * kCanvas, p.y * kCanvas};

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
           "viewBox=\"0 0 1000 1000\">\n";
    if (!title.empty()) out << "<title>" << detail::xml_escape(title) << "</title>\n";
    out << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

    out << "<g class=\"edges\" stroke=\"#8c8c8c\" stroke-opacity=\"0.7\">\n";
    for (const auto& e : g.edges) {
        const auto& a = canvas[e.source];
        const auto& b = canvas[e.target];
        out << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
            << "\" stroke-width=\"" << num(1.0 + 2.0 * e.weight) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g class=\"nodes\" stroke=\"#333333\" stroke-width=\"0.5\">\n";
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        const auto& a = g.nodes[i];
        const auto& c = canvas[i];
        const double r = node_size(static_cast<double>(a.freq), style);
        const std::string& fill = (!is_new.empty() && is_new[i]) ? style.new_node_color : style.color(a.cls);
        const auto shape = style.shape(a.cls);
        const std::string attrs = "class=\"node " + std::string(to_string(a.cls)) + "\" data-shape=\"" +
                                  std::string(to_string(shape)) + "\" data-id=\"" + detail::xml_escape(a.key()) +
                                  "\" fill=\"" + detail::xml_escape(fill) + "\"";
        switch (shape) {
        case NodeShape::Ellipse:
            out << "<circle " << attrs << " cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(r)
                << "\"/>\n";
            break;
        case NodeShape::Triangle: {
            // Upward equilateral triangle inscribed in the circle of radius r.
            const double h = r * std::numbers::sqrt3 / 2.0;
            const Point v[] = {{c.x, c.y - r}, {c.x + h, c.y + r / 2.0}, {c.x - h, c.y + r / 2.0}};
            out << "<path " << attrs << " d=\"" << polygon_path(v) << "\"/>\n";
            break;
        }
        case NodeShape::Diamond: {
            const Point v[] = {{c.x, c.y - r}, {c.x + r, c.y}, {c.x, c.y + r}, {c.x - r, c.y}};
            out << "<path " << attrs << " d=\"" << polygon_path(v) << "\"/>\n";
            break;
        }
        }
    }
    out << "</g>\n";

    out << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"middle\" fill=\"#222222\">\n";
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        const auto& c = canvas[i];
        const double r = node_size(static_cast<double>(g.nodes[i].freq), style);
        out << "<text x=\"" << num(c.x) << "\" y=\"" << num(c.y + r + 9.0) << "\">"
            << detail::xml_escape(g.nodes[i].label) << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

} // namespace scimap
