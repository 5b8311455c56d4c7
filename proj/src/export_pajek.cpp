#include "scimap/export.hpp"

#include "scimap/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace scimap {

std::string_view to_string(NodeShape shape) {
    switch (shape) {
    case NodeShape::Ellipse: return "ellipse";
    case NodeShape::Triangle: return "triangle";
    case NodeShape::Diamond: return "diamond";
    }
    return "ellipse";
}

NodeShape StyleSpec::shape(AttributeClass cls) const {
    switch (cls) {
    case AttributeClass::Author: return author_shape;
    case AttributeClass::Word: return word_shape;
    case AttributeClass::Journal: return journal_shape;
    }
    return author_shape;
}

const std::string& StyleSpec::color(AttributeClass cls) const {
    switch (cls) {
    case AttributeClass::Author: return author_color;
    case AttributeClass::Word: return word_color;
    case AttributeClass::Journal: return journal_color;
    }
    return author_color;
}

void StyleSpec::validate() const {
    if (!(s_min > 0.0)) throw Error(ErrorKind::InvalidArgument, "s_min must be > 0");
    if (!(s_scale >= 0.0)) throw Error(ErrorKind::InvalidArgument, "s_scale must be >= 0");
}

double node_size(double freq, const StyleSpec& style) {
    if (!(freq >= 1.0)) throw Error(ErrorKind::BadFreq, "node frequency must be >= 1");
    return style.s_min + style.s_scale * std::log(freq);
}

int class_code(AttributeClass cls) {
    return static_cast<int>(cls) + 1;
}

Positions rescale(std::span<const Point> pos, double lo, double hi) {
    Positions out(pos.begin(), pos.end());
    if (pos.empty()) return out;
    double min_x = pos[0].x, max_x = min_x, min_y = pos[0].y, max_y = min_y;
    for (const auto& p : pos) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double extent = std::max(max_x - min_x, max_y - min_y);
    const double centre = 0.5 * (lo + hi);
    const double scale = extent > 0.0 ? (hi - lo) / extent : 0.0;
    const double cx = 0.5 * (min_x + max_x);
    const double cy = 0.5 * (min_y + max_y);
    for (auto& p : out) {
        p = {centre + (p.x - cx) * scale, centre + (p.y - cy) * scale};
    }
    return out;
}

namespace {

std::string pajek_label(std::string_view label) {
    std::string out(label);
    std::replace(out.begin(), out.end(), '"', '\'');
    return out;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

std::string write_pajek(const HeteroGraph& g, std::span<const Point> pos, const StyleSpec& style) {
    style.validate();
    if (pos.size() != g.node_count()) throw Error(ErrorKind::InvalidArgument, "positions do not match node count");

    const auto scaled = rescale(pos);
    std::ostringstream out;
    out << "*Vertices " << g.node_count() << '\n';
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        const auto& a = g.nodes[i];
        const std::string fact = fixed6(node_size(static_cast<double>(a.freq), style) / style.s_min);
        out << i + 1 << " \"" << pajek_label(a.label) << "\" " << fixed6(scaled[i].x) << ' ' << fixed6(scaled[i].y)
            << ' ' << to_string(style.shape(a.cls)) << " x_fact " << fact << " y_fact " << fact << '\n';
    }
    out << "*Edges\n";
    for (const auto& e : g.edges) {
        out << e.source + 1 << ' ' << e.target + 1 << ' ' << fixed6(e.weight) << '\n';
    }
    return out.str();
}

std::string write_clu(const HeteroGraph& g) {
    std::ostringstream out;
    out << "*Vertices " << g.node_count() << '\n';
    for (const auto& a : g.nodes) out << class_code(a.cls) << '\n';
    return out.str();
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        pos = nl + 1;
    }
    return lines;
}

// Whitespace tokens, keeping a double-quoted token as one (quotes removed).
std::vector<std::string> pajek_tokens(std::string_view line, std::size_t line_no) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (detail::is_space(line[i])) {
            ++i;
            continue;
        }
        if (line[i] == '"') {
            const auto close = line.find('"', i + 1);
            if (close == std::string_view::npos) {
                throw Error(ErrorKind::MalformedFile, "unterminated label on line " + std::to_string(line_no));
            }
            tokens.emplace_back(line.substr(i + 1, close - i - 1));
            i = close + 1;
        } else {
            auto j = i;
            while (j < line.size() && !detail::is_space(line[j])) ++j;
            tokens.emplace_back(line.substr(i, j - i));
            i = j;
        }
    }
    return tokens;
}

template <class T>
T parse_number(const std::string& token, std::size_t line_no) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(ErrorKind::MalformedFile, "bad number '" + token + "' on line " + std::to_string(line_no));
    }
    return value;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (detail::ascii_lower(s[i]) != detail::ascii_lower(prefix[i])) return false;
    }
    return true;
}

} // namespace

PajekNetwork parse_pajek(std::string_view text) {
    PajekNetwork net;
    enum class Section { None, Vertices, Edges } section = Section::None;
    std::size_t declared = 0;
    const auto lines = split_lines(text);

    for (std::size_t k = 0; k < lines.size(); ++k) {
        const std::size_t line_no = k + 1;
        const auto line = detail::trim(lines[k]);
        if (line.empty() || line.front() == '%') continue;

        if (line.front() == '*') {
            if (starts_with_ci(line, "*vertices")) {
                auto tokens = pajek_tokens(line, line_no);
                if (tokens.size() < 2) throw Error(ErrorKind::MalformedFile, "*Vertices without a count");
                declared = parse_number<std::size_t>(tokens[1], line_no);
                section = Section::Vertices;
            } else if (starts_with_ci(line, "*edges") || starts_with_ci(line, "*arcs")) {
                section = Section::Edges;
            } else {
                throw Error(ErrorKind::MalformedFile, "unsupported section on line " + std::to_string(line_no));
            }
            continue;
        }

        const auto tokens = pajek_tokens(line, line_no);
        if (section == Section::Vertices) {
            PajekVertex v;
            v.id = parse_number<std::size_t>(tokens.at(0), line_no);
            if (v.id != net.vertices.size() + 1) {
                throw Error(ErrorKind::MalformedFile, "vertex ids must be consecutive, line " + std::to_string(line_no));
            }
            v.label = tokens.size() > 1 ? tokens[1] : std::to_string(v.id);
            std::size_t t = 2;
            if (tokens.size() >= 4) {
                v.x = parse_number<double>(tokens[2], line_no);
                v.y = parse_number<double>(tokens[3], line_no);
                t = 4;
            }
            for (; t < tokens.size(); ++t) {
                const auto& tok = tokens[t];
                if ((tok == "x_fact" || tok == "y_fact") && t + 1 < tokens.size()) {
                    (tok == "x_fact" ? v.x_fact : v.y_fact) = parse_number<double>(tokens[t + 1], line_no);
                    ++t;
                } else if (tok == "ellipse" || tok == "triangle" || tok == "diamond" || tok == "box" ||
                           tok == "cross" || tok == "empty") {
                    v.shape = tok;
                }
            }
            net.vertices.push_back(std::move(v));
        } else if (section == Section::Edges) {
            if (tokens.size() < 2) throw Error(ErrorKind::MalformedFile, "short edge line " + std::to_string(line_no));
            PajekEdge e;
            e.source = parse_number<std::size_t>(tokens[0], line_no);
            e.target = parse_number<std::size_t>(tokens[1], line_no);
            if (tokens.size() > 2) e.weight = parse_number<double>(tokens[2], line_no);
            if (e.source < 1 || e.target < 1 || e.source > declared || e.target > declared) {
                throw Error(ErrorKind::MalformedFile, "edge endpoint out of range on line " + std::to_string(line_no));
            }
            net.edges.push_back(e);
        } else {
            throw Error(ErrorKind::MalformedFile, "data before *Vertices on line " + std::to_string(line_no));
        }
    }

    if (net.vertices.size() != declared) {
        // Pajek allows unlisted vertices; they default to their number as label.
        if (net.vertices.size() > declared) throw Error(ErrorKind::MalformedFile, "more vertices than declared");
        while (net.vertices.size() < declared) {
            PajekVertex v;
            v.id = net.vertices.size() + 1;
            v.label = std::to_string(v.id);
            net.vertices.push_back(std::move(v));
        }
    }
    return net;
}

std::vector<int> parse_clu(std::string_view text) {
    std::vector<int> codes;
    std::size_t declared = 0;
    bool header = false;
    const auto lines = split_lines(text);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const auto line = detail::trim(lines[k]);
        if (line.empty() || line.front() == '%') continue;
        if (line.front() == '*') {
            auto tokens = pajek_tokens(line, k + 1);
            if (!starts_with_ci(line, "*vertices") || tokens.size() < 2) {
                throw Error(ErrorKind::MalformedFile, "bad partition header");
            }
            declared = parse_number<std::size_t>(tokens[1], k + 1);
            header = true;
            continue;
        }
        if (!header) throw Error(ErrorKind::MalformedFile, "partition without *Vertices header");
        codes.push_back(parse_number<int>(std::string(line), k + 1));
    }
    if (codes.size() != declared) throw Error(ErrorKind::MalformedFile, "partition length differs from header");
    return codes;
}

} // namespace scimap
