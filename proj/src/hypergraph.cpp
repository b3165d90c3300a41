#include <hyperpath/hypergraph.hpp>

#include <algorithm>
#include <cctype>

namespace hyperpath {

VertexSet make_set(std::vector<VertexId> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

bool set_contains(const VertexSet& s, const VertexId& v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool set_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j) ++i; else ++j;
    }
    return true;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

std::string render_subset(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += "|";
        out += s[i];
    }
    return out + "}";
}

VertexId render_pair(const VertexId& v, const VertexId& i) { return v + "|" + i; }

std::string label_violation(const VertexId& label) {
    if (label.empty()) return "label is empty";
    for (char c : label) {
        if (std::isspace(static_cast<unsigned char>(c)))
            return "label contains whitespace";
        if (c == '\'') return "label contains reserved character '";
        if (c == '|') return "label contains reserved character |";
    }
    return "";
}

std::vector<std::string> validate(const DirectedHypergraph& g) {
    std::vector<std::string> out;
    if (g.vertices.empty()) out.push_back("vertices must be non-empty");
    VertexSet covered;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Arrow& e = g.edges[i];
        const std::string tag = "arrow " + std::to_string(i) + " (" + render_subset(e.origin) +
                                " -> " + render_subset(e.end) + ")";
        if (e.origin.empty()) out.push_back(tag + ": empty origin");
        if (e.end.empty()) out.push_back(tag + ": empty end");
        if (!sets_disjoint(e.origin, e.end))
            out.push_back(tag + ": origin and end are not disjoint");
        for (const auto& v : e.origin)
            if (!set_contains(g.vertices, v))
                out.push_back(tag + ": unknown vertex " + v);
        for (const auto& v : e.end)
            if (!set_contains(g.vertices, v))
                out.push_back(tag + ": unknown vertex " + v);
        for (std::size_t j = 0; j < i; ++j)
            if (g.edges[j] == e)
                out.push_back(tag + ": duplicate of arrow " + std::to_string(j));
        covered = set_union(covered, set_union(e.origin, e.end));
    }
    for (const auto& v : g.vertices)
        if (!set_contains(covered, v))
            out.push_back("vertex " + v + " lies in no arrow");
    return out;
}

std::vector<std::string> validate(const Hypergraph& g) {
    std::vector<std::string> out;
    if (g.vertices.empty()) out.push_back("vertices must be non-empty");
    VertexSet covered;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const VertexSet& e = g.edges[i];
        const std::string tag = "edge " + std::to_string(i) + " " + render_subset(e);
        if (e.empty()) out.push_back(tag + ": empty edge");
        if (g.strict && e.size() < 2) out.push_back(tag + ": singleton edge in strict mode");
        for (const auto& v : e)
            if (!set_contains(g.vertices, v)) out.push_back(tag + ": unknown vertex " + v);
        for (std::size_t j = 0; j < i; ++j)
            if (g.edges[j] == e) out.push_back(tag + ": duplicate of edge " + std::to_string(j));
        covered = set_union(covered, e);
    }
    for (const auto& v : g.vertices)
        if (!set_contains(covered, v)) out.push_back("vertex " + v + " lies in no edge");
    return out;
}

PSets p_sets(const DirectedHypergraph& g) {
    std::set<VertexSet> origins, ends, all;
    for (const Arrow& e : g.edges) {
        origins.insert(e.origin);
        ends.insert(e.end);
        all.insert(e.origin);
        all.insert(e.end);
    }
    PSets p;
    p.origins.assign(origins.begin(), origins.end());
    p.ends.assign(ends.begin(), ends.end());
    p.all.assign(all.begin(), all.end());
    return p;
}

} // namespace hyperpath
