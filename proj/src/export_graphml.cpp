#include "scimap/export.hpp"

#include "scimap/error.hpp"
#include "text_util.hpp"

#include <cstdio>
#include <sstream>

namespace scimap {

namespace {

std::string format(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

} // namespace

std::string write_graphml(const HeteroGraph& g, std::span<const Point> pos, const StyleSpec& style) {
    style.validate();
    if (pos.size() != g.node_count()) throw Error(ErrorKind::InvalidArgument, "positions do not match node count");
    const auto scaled = rescale(pos);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n"
        << "    xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
        << "    xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
           "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
        << "  <key id=\"d0\" for=\"node\" attr.name=\"class\" attr.type=\"string\"/>\n"
        << "  <key id=\"d1\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
        << "  <key id=\"d2\" for=\"node\" attr.name=\"freq\" attr.type=\"int\"/>\n"
        << "  <key id=\"d3\" for=\"node\" attr.name=\"x\" attr.type=\"double\"/>\n"
        << "  <key id=\"d4\" for=\"node\" attr.name=\"y\" attr.type=\"double\"/>\n"
        << "  <key id=\"d5\" for=\"node\" attr.name=\"size\" attr.type=\"double\"/>\n"
        << "  <key id=\"d6\" for=\"node\" attr.name=\"first_year\" attr.type=\"int\"/>\n"
        << "  <key id=\"d7\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";

    for (std::size_t i = 0; i < g.node_count(); ++i) {
        const auto& a = g.nodes[i];
        out << "    <node id=\"n" << i << "\">\n"
            << "      <data key=\"d0\">" << to_string(a.cls) << "</data>\n"
            << "      <data key=\"d1\">" << detail::xml_escape(a.label) << "</data>\n"
            << "      <data key=\"d2\">" << a.freq << "</data>\n"
            << "      <data key=\"d3\">" << format("%.6f", scaled[i].x) << "</data>\n"
            << "      <data key=\"d4\">" << format("%.6f", scaled[i].y) << "</data>\n"
            << "      <data key=\"d5\">" << format("%.6f", node_size(static_cast<double>(a.freq), style)) << "</data>\n";
        if (a.first_year) out << "      <data key=\"d6\">" << *a.first_year << "</data>\n";
        out << "    </node>\n";
    }
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        const auto& e = g.edges[k];
        out << "    <edge id=\"e" << k << "\" source=\"n" << e.source << "\" target=\"n" << e.target << "\">\n"
            << "      <data key=\"d7\">" << format("%.17g", e.weight) << "</data>\n"
            << "    </edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

} // namespace scimap
