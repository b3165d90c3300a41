#include <hyperpath/document.hpp>

#include <json.hpp>

#include <algorithm>

namespace hyperpath {

using nlohmann::json;

namespace {

std::string locate(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

VertexId parse_label(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a string label");
    VertexId v = j.get<std::string>();
    std::string why = label_violation(v);
    if (!why.empty()) throw ParseError(where + ": " + why);
    return v;
}

VertexSet parse_label_set(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ParseError(where + ": expected a non-empty array of labels");
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_label(j[i], where + "[" + std::to_string(i) + "]"));
    VertexSet s = make_set(out);
    if (s.size() != out.size()) throw ParseError(where + ": duplicate label");
    return s;
}

VertexSet parse_vertices(const json& j) {
    if (!j.is_array()) throw ParseError("vertices: expected an array");
    if (j.empty()) throw ParseError("vertices must be non-empty");
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_label(j[i], "vertices[" + std::to_string(i) + "]"));
    VertexSet s = make_set(out);
    if (s.size() != out.size()) {
        std::sort(out.begin(), out.end());
        auto dup = std::adjacent_find(out.begin(), out.end());
        throw ParseError("vertices: duplicate vertex \"" + *dup + "\"");
    }
    return s;
}

void reject_unknown(const json& j, std::initializer_list<std::string> known) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw ParseError("unknown field \"" + it.key() + "\"");
}

void require_valid(const std::vector<std::string>& violations) {
    if (violations.empty()) return;
    std::string msg = "invalid input:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw ParseError(msg);
}

} // namespace

std::string kind_name(Document::Kind k) {
    switch (k) {
        case Document::Kind::directed_hypergraph: return "directed-hypergraph";
        case Document::Kind::hypergraph: return "hypergraph";
        case Document::Kind::digraph: return "digraph";
        case Document::Kind::morphism: return "morphism";
    }
    return "?";
}

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("syntax error at " + locate(text, e.byte ? e.byte - 1 : 0) + ": " +
                         e.what());
    }
    if (!j.is_object()) throw ParseError("expected a JSON object");

    Document doc;
    if (j.contains("vertex_map")) {
        reject_unknown(j, {"vertex_map"});
        if (!j["vertex_map"].is_object()) throw ParseError("vertex_map: expected an object");
        doc.kind = Document::Kind::morphism;
        for (auto it = j["vertex_map"].begin(); it != j["vertex_map"].end(); ++it) {
            std::string why = label_violation(it.key());
            if (!why.empty()) throw ParseError("vertex_map key \"" + it.key() + "\": " + why);
            doc.vertex_map[it.key()] = parse_label(it.value(), "vertex_map[\"" + it.key() + "\"]");
        }
        return doc;
    }
    if (j.contains("arrows")) {
        reject_unknown(j, {"vertices", "arrows"});
        if (!j.contains("vertices")) throw ParseError("missing field \"vertices\"");
        doc.kind = Document::Kind::digraph;
        doc.dg.vertices = parse_vertices(j["vertices"]);
        if (!j["arrows"].is_array()) throw ParseError("arrows: expected an array");
        for (std::size_t i = 0; i < j["arrows"].size(); ++i) {
            const json& a = j["arrows"][i];
            const std::string where = "arrows[" + std::to_string(i) + "]";
            if (!a.is_array() || a.size() != 2)
                throw ParseError(where + ": expected a pair [from, to]");
            VertexId v = parse_label(a[0], where), w = parse_label(a[1], where);
            if (v == w) throw ParseError(where + ": loop at vertex " + v);
            if (!set_contains(doc.dg.vertices, v) || !set_contains(doc.dg.vertices, w))
                throw ParseError(where + ": unknown vertex");
            if (!doc.dg.arrows.insert({v, w}).second)
                throw ParseError(where + ": duplicate arrow");
        }
        return doc;
    }
    if (!j.contains("vertices") || !j.contains("edges"))
        throw ParseError("expected fields \"vertices\" and \"edges\", or \"arrows\", or \"vertex_map\"");
    reject_unknown(j, {"vertices", "edges"});
    if (!j["edges"].is_array()) throw ParseError("edges: expected an array");

    const json& edges = j["edges"];
    bool directed = !edges.empty() && edges[0].is_object();
    if (directed) {
        doc.kind = Document::Kind::directed_hypergraph;
        doc.dh.vertices = parse_vertices(j["vertices"]);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::string where = "edges[" + std::to_string(i) + "]";
            const json& e = edges[i];
            if (!e.is_object()) throw ParseError(where + ": expected an object");
            reject_unknown(e, {"origin", "end"});
            if (!e.contains("origin") || !e.contains("end"))
                throw ParseError(where + ": expected fields \"origin\" and \"end\"");
            Arrow a{parse_label_set(e["origin"], where + ".origin"),
                    parse_label_set(e["end"], where + ".end")};
            doc.dh.edges.push_back(std::move(a));
        }
        require_valid(validate(doc.dh));
    } else {
        doc.kind = Document::Kind::hypergraph;
        doc.hg.vertices = parse_vertices(j["vertices"]);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::string where = "edges[" + std::to_string(i) + "]";
            doc.hg.edges.push_back(parse_label_set(edges[i], where));
        }
        require_valid(validate(doc.hg));
    }
    return doc;
}

std::string serialize(const Document& doc) {
    json j;
    switch (doc.kind) {
        case Document::Kind::directed_hypergraph: {
            j["vertices"] = doc.dh.vertices;
            j["edges"] = json::array();
            for (const Arrow& e : doc.dh.edges)
                j["edges"].push_back({{"origin", e.origin}, {"end", e.end}});
            break;
        }
        case Document::Kind::hypergraph: {
            j["vertices"] = doc.hg.vertices;
            j["edges"] = doc.hg.edges;
            break;
        }
        case Document::Kind::digraph: {
            j["vertices"] = doc.dg.vertices;
            j["arrows"] = json::array();
            for (const auto& [v, w] : doc.dg.arrows) j["arrows"].push_back({v, w});
            break;
        }
        case Document::Kind::morphism: {
            j["vertex_map"] = doc.vertex_map;
            break;
        }
    }
    return j.dump(2) + "\n";
}

DirectedHypergraph parse_directed_hypergraph(const std::string& text) {
    Document doc = parse_document(text);
    if (doc.kind != Document::Kind::directed_hypergraph)
        throw ParseError("expected a directed hypergraph, got a " + kind_name(doc.kind));
    return doc.dh;
}

std::map<VertexId, VertexId> parse_morphism_map(const std::string& text) {
    Document doc = parse_document(text);
    if (doc.kind != Document::Kind::morphism)
        throw ParseError("expected a morphism document, got a " + kind_name(doc.kind));
    return doc.vertex_map;
}

} // namespace hyperpath
