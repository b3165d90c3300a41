#pragma once

#include <hyperpath/hypergraph.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace hyperpath {

// Input parsing or validation failure; the message carries position or
// index information. Maps to CLI exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// One parsed input file. Kinds are inferred from the shape of the JSON:
//   directed hypergraph  {"vertices": [...], "edges": [{"origin": [...], "end": [...]}]}
//   hypergraph           {"vertices": [...], "edges": [["a", "b"], ...]}
//   digraph              {"vertices": [...], "arrows": [["v", "w"], ...]}
//   morphism             {"vertex_map": {"v": "w", ...}}
struct Document {
    enum class Kind { directed_hypergraph, hypergraph, digraph, morphism };
    Kind kind;
    DirectedHypergraph dh;
    Hypergraph hg;
    Digraph dg;
    std::map<VertexId, VertexId> vertex_map;
};

std::string kind_name(Document::Kind k);

// Strict: unknown fields, duplicate vertices or edges, reserved characters,
// and model violations are all rejected.
Document parse_document(const std::string& text);

std::string serialize(const Document& doc);

// Parses and requires a specific kind.
DirectedHypergraph parse_directed_hypergraph(const std::string& text);
std::map<VertexId, VertexId> parse_morphism_map(const std::string& text);

} // namespace hyperpath
