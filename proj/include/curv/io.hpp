/**
 * File formats: edge-list parsing, JSON emission of results, energy and
 * family files, and annotated DOT export.
 *
 * Exact values always serialize as "num/den" strings in lowest terms;
 * plain JSON numbers appear only in Monte-Carlo and variance-minimization
 * output.  Simplices are keyed by their sorted vertex ids joined with
 * single spaces ("0 1 4").
 */

#ifndef CURV_IO_HPP
#define CURV_IO_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curv/complex.hpp"
#include "curv/curvature.hpp"
#include "curv/graph.hpp"
#include "curv/index.hpp"
#include "curv/rational.hpp"

namespace curv {

using Json = nlohmann::json;

/**
 * Parse an edge list: a line with two tokens "u v" is an edge, a line with
 * one token declares a vertex (how isolated vertices survive a round
 * trip); '#' starts a comment, blank lines are skipped.  Labels may be
 * arbitrary tokens and are densified in order of first appearance; the
 * original labels are kept on the graph.
 */
inline Graph parse_edge_list(const std::string& text)
{
    std::map<std::string, int> id_of;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_line;

    std::istringstream stream(text);
    std::string line;
    int line_number = 0;
    while (std::getline(stream, line)) {
        ++line_number;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream tokens(line);
        std::string u, v, extra;
        if (!(tokens >> u))
            continue; // blank
        auto intern = [&](const std::string& token) {
            auto [it, inserted] = id_of.emplace(token, static_cast<int>(labels.size()));
            if (inserted)
                labels.push_back(token);
            return it->second;
        };
        if (!(tokens >> v)) {
            intern(u); // vertex declaration
            continue;
        }
        if (tokens >> extra)
            throw ParseError("line " + std::to_string(line_number) +
                             ": expected at most two vertex tokens");
        int iu = intern(u), iv = intern(v);
        if (iu == iv)
            throw ParseError("line " + std::to_string(line_number) + ": self-loop at \"" +
                             u + "\"");
        edges.emplace_back(iu, iv);
        edge_line.push_back(line_number);
    }

    Graph g(static_cast<int>(labels.size()));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (g.has_edge(edges[e].first, edges[e].second))
            throw ParseError("line " + std::to_string(edge_line[e]) + ": duplicate edge");
        g.add_edge(edges[e].first, edges[e].second);
    }
    g.set_labels(std::move(labels));
    return g;
}

/// Vertex declarations in id order, then edges; parses back to the same graph.
inline std::string emit_edge_list(const Graph& g)
{
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v)
        out << g.label(v) << "\n";
    for (auto [u, v] : g.edges())
        out << g.label(u) << " " << g.label(v) << "\n";
    return out.str();
}

inline std::string simplex_key(const std::vector<int>& vertices)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i)
            out << ' ';
        out << vertices[i];
    }
    return out.str();
}

inline std::vector<int> parse_simplex_key(const std::string& key)
{
    std::istringstream in(key);
    std::vector<int> vertices;
    int v;
    while (in >> v)
        vertices.push_back(v);
    if (vertices.empty() || !std::is_sorted(vertices.begin(), vertices.end()) ||
        std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw ParseError("bad simplex key \"" + key + "\" (want sorted vertex ids)");
    return vertices;
}

/// Energy file: JSON object simplex-key -> "num/den"; omissions default to omega.
inline EnergyFunction parse_energy_json(const std::string& text)
{
    Json parsed;
    try {
        parsed = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("energy file: ") + e.what());
    }
    if (!parsed.is_object())
        throw ParseError("energy file: top-level JSON object expected");
    EnergyFunction h;
    for (auto& [key, value] : parsed.items()) {
        if (!value.is_string())
            throw ParseError("energy file: value for \"" + key +
                             "\" must be a \"num/den\" string");
        h.set(parse_simplex_key(key), parse_rational(value.get<std::string>()));
    }
    return h;
}

inline Json graph_to_json(const Graph& g)
{
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    Json vertices = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
        vertices.push_back(v);
    Json result{{"vertices", vertices}, {"edges", edges}};
    if (!g.labels().empty()) {
        Json labels = Json::object();
        for (int v = 0; v < g.vertex_count(); ++v)
            labels[std::to_string(v)] = g.label(v);
        result["labels"] = labels;
    }
    return result;
}

/// Complexes serialize as vertices plus facets; downward closure is implied.
inline Json complex_to_json(const SimplicialComplex& c)
{
    Json facets = Json::array();
    for (const auto& s : c.facets())
        facets.push_back(s.vertices);
    return Json{{"vertices", c.vertices()}, {"facets", facets}};
}

inline Json curvature_to_json(const CurvatureMap& k)
{
    Json values = Json::object();
    for (const auto& [v, value] : k)
        values[std::to_string(v)] = to_string(value);
    return values;
}

inline Json family_to_json(const SimplicialComplex& c, const DistributionFamily& family)
{
    Json values = Json::object();
    for (int id = 0; id < c.size(); ++id) {
        const Simplex& x = c.simplex(id);
        if (x.dim() == 0)
            continue;
        Json row = Json::array();
        for (const Rational& entry : family.at(id))
            row.push_back(to_string(entry));
        values[simplex_key(x.vertices)] = row;
    }
    return values;
}

inline DistributionFamily parse_family_json(const SimplicialComplex& c,
                                            const std::string& text)
{
    Json parsed;
    try {
        parsed = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("family file: ") + e.what());
    }
    if (!parsed.is_object())
        throw ParseError("family file: top-level JSON object expected");
    DistributionFamily family;
    family.resize(c);
    for (int id = 0; id < c.size(); ++id)
        if (c.simplex(id).dim() == 0)
            family.at(id)[0] = 1;
    for (auto& [key, value] : parsed.items()) {
        auto vertices = parse_simplex_key(key);
        int id = c.id_of(vertices);
        if (id < 0)
            throw ParseError("family file: simplex \"" + key + "\" not in the complex");
        if (!value.is_array() || value.size() != vertices.size())
            throw ParseError("family file: \"" + key + "\" needs " +
                             std::to_string(vertices.size()) + " entries");
        for (std::size_t i = 0; i < vertices.size(); ++i)
            family.at(id)[i] = parse_rational(value[i].get<std::string>());
    }
    if (!family.is_stochastic())
        throw ParseError("family file: entries must be probability vectors");
    return family;
}

/// DOT export; vertices annotated with curvature labels when provided.
inline std::string emit_dot(const Graph& g, const CurvatureMap* k = nullptr)
{
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << g.label(v);
        if (k && k->count(v))
            out << "\\nK=" << to_string(k->at(v));
        out << "\"];\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace curv

#endif
