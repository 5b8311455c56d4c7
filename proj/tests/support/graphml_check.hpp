#ifndef SCIMAP_TESTS_GRAPHML_CHECK_HPP
#define SCIMAP_TESTS_GRAPHML_CHECK_HPP

// Reads a GraphML document with an independent XML parser and checks it
// against the structural rules of the GraphML 1.0 schema: element nesting and
// order, required attributes and their enumerations, id uniqueness, edge
// endpoints and data-key references, and typed data values.

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace scimap::testing {

struct GraphmlReport {
    std::vector<std::string> errors;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::vector<std::map<std::string, std::string>> node_data; ///< attr.name -> text
    std::vector<std::string> edge_weights;
};

namespace graphml_detail {

namespace pt = boost::property_tree;

inline bool typed_value_ok(const std::string& type, const std::string& v) {
    if (type == "string") return true;
    if (type == "boolean") return v == "true" || v == "false";
    std::istringstream in(v);
    if (type == "int" || type == "long") {
        long long x;
        in >> x;
    } else {
        double x;
        in >> x;
    }
    return !in.fail() && in.peek() == std::char_traits<char>::eof();
}

struct Key {
    std::string domain;
    std::string name;
    std::string type;
};

inline std::string attr(const pt::ptree& node, const std::string& name) {
    // attribute names such as "attr.name" contain the default path separator
    return node.get<std::string>(pt::ptree::path_type("<xmlattr>/" + name, '/'), "");
}

} // namespace graphml_detail

inline GraphmlReport check_graphml(const std::string& text) {
    namespace pt = boost::property_tree;
    using namespace graphml_detail;
    GraphmlReport r;
    auto fail = [&](const std::string& msg) { r.errors.push_back(msg); };

    pt::ptree doc;
    try {
        std::istringstream in(text);
        pt::read_xml(in, doc);
    } catch (const pt::xml_parser_error& e) {
        fail(std::string("not well-formed: ") + e.what());
        return r;
    }
    if (doc.size() != 1 || doc.begin()->first != "graphml") {
        fail("root element must be <graphml>");
        return r;
    }
    const auto& root = doc.begin()->second;
    if (attr(root, "xmlns") != "http://graphml.graphdrawing.org/xmlns") fail("missing GraphML namespace");

    static const std::set<std::string> domains{"all", "graphml", "graph", "node", "edge", "hyperedge", "port", "endpoint"};
    static const std::set<std::string> types{"boolean", "int", "long", "float", "double", "string"};

    std::map<std::string, Key> keys;
    bool seen_graph = false;
    for (const auto& [tag, child] : root) {
        if (tag == "<xmlattr>" || tag == "<xmlcomment>" || tag == "desc") continue;
        if (tag == "key") {
            if (seen_graph) fail("<key> after <graph>");
            const auto id = attr(child, "id");
            if (id.empty()) fail("<key> without id");
            Key k{attr(child, "for"), attr(child, "attr.name"), attr(child, "attr.type")};
            if (k.domain.empty()) k.domain = "all";
            if (!domains.count(k.domain)) fail("key " + id + ": bad 'for' value " + k.domain);
            if (k.type.empty()) k.type = "string";
            if (!types.count(k.type)) fail("key " + id + ": bad attr.type " + k.type);
            if (!keys.emplace(id, k).second) fail("duplicate key id " + id);
            continue;
        }
        if (tag != "graph") {
            fail("unexpected element <" + tag + "> under <graphml>");
            continue;
        }
        seen_graph = true;
        const auto def = attr(child, "edgedefault");
        if (def != "directed" && def != "undirected") fail("graph edgedefault must be directed|undirected");

        auto check_data = [&](const pt::ptree& owner, const std::string& domain,
                              std::map<std::string, std::string>* sink) {
            for (const auto& [dtag, d] : owner) {
                if (dtag != "data") continue;
                const auto key = attr(d, "key");
                const auto it = keys.find(key);
                if (it == keys.end()) {
                    fail("data references undeclared key " + key);
                    continue;
                }
                if (it->second.domain != domain && it->second.domain != "all") {
                    fail("key " + key + " declared for " + it->second.domain + " used on " + domain);
                }
                const auto value = d.get_value<std::string>();
                if (!typed_value_ok(it->second.type, value)) fail("value '" + value + "' is not " + it->second.type);
                if (sink) (*sink)[it->second.name] = value;
            }
        };

        std::set<std::string> node_ids, edge_ids;
        std::vector<std::pair<std::string, std::string>> endpoints;
        for (const auto& [gtag, g] : child) {
            if (gtag == "<xmlattr>" || gtag == "<xmlcomment>" || gtag == "desc") continue;
            if (gtag == "data") continue;
            if (gtag == "node") {
                const auto id = attr(g, "id");
                if (id.empty() || !node_ids.insert(id).second) fail("node id missing or duplicated: " + id);
                for (const auto& [ntag, _] : g)
                    if (ntag != "<xmlattr>" && ntag != "data" && ntag != "desc" && ntag != "port" && ntag != "graph")
                        fail("unexpected element <" + ntag + "> under <node>");
                r.node_data.emplace_back();
                check_data(g, "node", &r.node_data.back());
                ++r.nodes;
            } else if (gtag == "edge") {
                const auto id = attr(g, "id");
                if (!id.empty() && !edge_ids.insert(id).second) fail("duplicate edge id " + id);
                const auto s = attr(g, "source"), t = attr(g, "target");
                if (s.empty() || t.empty()) fail("edge without source/target");
                endpoints.emplace_back(s, t);
                std::map<std::string, std::string> data;
                check_data(g, "edge", &data);
                r.edge_weights.push_back(data.count("weight") ? data["weight"] : "");
                ++r.edges;
            } else {
                fail("unexpected element <" + gtag + "> under <graph>");
            }
        }
        check_data(child, "graph", nullptr);
        for (const auto& [s, t] : endpoints)
            if (!node_ids.count(s) || !node_ids.count(t)) fail("edge endpoint not a node: " + s + " -> " + t);
    }
    if (!seen_graph) fail("no <graph> element");
    return r;
}

} // namespace scimap::testing

#endif
