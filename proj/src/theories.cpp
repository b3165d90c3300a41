#include <hyperpath/theories.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hyperpath {

TheoryKind theory_from_name(const std::string& name) {
    if (name == "connective") return TheoryKind::connective;
    if (name == "bold") return TheoryKind::bold;
    if (name == "nondirected") return TheoryKind::nondirected;
    if (name == "natural") return TheoryKind::natural;
    throw std::invalid_argument("unknown theory: " + name +
                                " (expected connective, bold, nondirected, natural)");
}

std::string theory_name(TheoryKind kind) {
    switch (kind) {
        case TheoryKind::connective: return "connective";
        case TheoryKind::bold: return "bold";
        case TheoryKind::nondirected: return "nondirected";
        case TheoryKind::natural: return "natural";
    }
    return "?";
}

std::string TheorySpec::label() const {
    std::string s = theory_name(kind);
    if (kind == TheoryKind::connective || kind == TheoryKind::nondirected)
        s += "(" + std::to_string(density) + ")";
    return s;
}

Digraph connective_digraph(const DirectedHypergraph& g, int density) {
    std::map<std::pair<VertexId, VertexId>, int> count;
    for (const Arrow& e : g.edges)
        for (const VertexId& v : e.origin)
            for (const VertexId& w : e.end) ++count[{v, w}];
    Digraph d;
    d.vertices = g.vertices;
    for (const auto& [vw, c] : count)
        if (c >= density) d.arrows.insert(vw);
    return d;
}

PathComplexView connective_view(const DirectedHypergraph& g, int density, int max_length) {
    if (density < 1) throw std::invalid_argument("density must be >= 1");
    return digraph_complex(connective_digraph(g, density), max_length,
                           "connective(" + std::to_string(density) + ")");
}

// ---------------------------------------------------------------------------
// Bold membership automaton.
//
// States, with e and d ranging over arrow indices:
//   head(e)      the path so far stays inside origin(e), no crossing yet
//   inside_end(e) the path so far stays inside end(e), no crossing yet
//   between(d,e) crossed d, walking inside end(d) & origin(e) toward e
//   tail(e)      crossed e last, walking inside end(e)
// head/inside_end/tail states accept; a live between(d,e) always has tail(d)
// alive beside it, so reachability of a non-empty state set equals
// membership of the prefix.
// ---------------------------------------------------------------------------

namespace {

struct BoldAutomaton {
    const DirectedHypergraph& g;
    std::size_t ne;

    // State numbering: head(e)=e, inside_end(e)=ne+e, tail(e)=2*ne+e,
    // between(d,e)=3*ne + d*ne + e.
    explicit BoldAutomaton(const DirectedHypergraph& g_) : g(g_), ne(g_.edges.size()) {}

    std::size_t head(std::size_t e) const { return e; }
    std::size_t inside_end(std::size_t e) const { return ne + e; }
    std::size_t tail(std::size_t e) const { return 2 * ne + e; }
    std::size_t between(std::size_t d, std::size_t e) const { return 3 * ne + d * ne + e; }
    std::size_t state_count() const { return 3 * ne + ne * ne; }

    std::vector<bool> start(const VertexId& x) const {
        std::vector<bool> s(state_count(), false);
        for (std::size_t e = 0; e < ne; ++e) {
            if (set_contains(g.edges[e].origin, x)) s[head(e)] = true;
            if (set_contains(g.edges[e].end, x)) s[inside_end(e)] = true;
        }
        return s;
    }

    // One step u -> v. u is implicit in the state invariants.
    std::vector<bool> step(const std::vector<bool>& s, const VertexId& v) const {
        std::vector<bool> t(state_count(), false);
        auto cross = [&](std::size_t e) {
            // v is the terminal vertex of the crossing of e.
            t[tail(e)] = true;
            for (std::size_t j = 0; j < ne; ++j)
                if (set_contains(g.edges[j].origin, v)) t[between(e, j)] = true;
        };
        for (std::size_t e = 0; e < ne; ++e) {
            if (s[head(e)]) {
                if (set_contains(g.edges[e].origin, v)) t[head(e)] = true;
                if (set_contains(g.edges[e].end, v)) cross(e);
            }
            if (s[inside_end(e)] && set_contains(g.edges[e].end, v)) t[inside_end(e)] = true;
            if (s[tail(e)] && set_contains(g.edges[e].end, v)) t[tail(e)] = true;
        }
        for (std::size_t d = 0; d < ne; ++d)
            for (std::size_t e = 0; e < ne; ++e) {
                if (!s[between(d, e)]) continue;
                if (set_contains(g.edges[d].end, v) && set_contains(g.edges[e].origin, v))
                    t[between(d, e)] = true;
                if (set_contains(g.edges[e].end, v)) cross(e);
            }
        return t;
    }

    bool accepts(const std::vector<bool>& s) const {
        for (std::size_t e = 0; e < ne; ++e)
            if (s[head(e)] || s[inside_end(e)] || s[tail(e)]) return true;
        return false;
    }

    bool alive(const std::vector<bool>& s) const {
        return std::find(s.begin(), s.end(), true) != s.end();
    }
};

} // namespace

bool bold_contains(const DirectedHypergraph& g, const Path& p) {
    for (const VertexId& v : p)
        if (!set_contains(g.vertices, v))
            throw std::invalid_argument("bold membership: unknown vertex " + v);
    if (p.empty()) return false;
    BoldAutomaton a(g);
    std::vector<bool> s = a.start(p.front());
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i] == p[i - 1]) {
            // Stationary steps stay inside whatever set the walk is in.
            continue;
        }
        s = a.step(s, p[i]);
        if (!a.alive(s)) return false;
    }
    return a.accepts(s);
}

PathComplexView bold_view(const DirectedHypergraph& g, int max_length) {
    BoldAutomaton automaton(g);

    PathComplexView view;
    view.vertices = g.vertices;
    view.max_length = max_length;
    view.label = "bold";
    view.allowed.resize(max_length + 1);

    // Transition cache per (state set, next vertex); state sets are shared
    // between all paths that reach them.
    std::map<std::pair<std::vector<bool>, VertexId>, std::vector<bool>> cache;
    auto step = [&](const std::vector<bool>& s, const VertexId& v) -> const std::vector<bool>& {
        auto key = std::make_pair(s, v);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(std::move(key), automaton.step(s, v)).first;
        return it->second;
    };

    std::function<void(Path&, const std::vector<bool>&)> extend =
        [&](Path& p, const std::vector<bool>& s) {
            view.allowed[path_length(p)].push_back(p);
            if (path_length(p) == max_length) return;
            for (const VertexId& v : g.vertices) {
                if (v == p.back()) continue;
                const std::vector<bool>& t = step(s, v);
                if (!automaton.accepts(t)) continue;
                p.push_back(v);
                extend(p, t);
                p.pop_back();
            }
        };
    for (const VertexId& v : g.vertices) {
        std::vector<bool> s = automaton.start(v);
        if (automaton.accepts(s)) {
            Path p{v};
            extend(p, s);
        }
    }
    for (auto& list : view.allowed) std::sort(list.begin(), list.end());

    DirectedHypergraph copy = g;
    view.contains = [copy](const Path& p) { return bold_contains(copy, p); };
    return view;
}

PathComplexView hypergraph_density_view(const Hypergraph& h, int density, int max_length,
                                        std::string label) {
    if (density < 1) throw std::invalid_argument("density must be >= 1");
    auto edges = h.edges;
    auto verts = h.vertices;
    auto oracle = [edges, verts, density](const Path& p) -> bool {
        if (p.empty()) return false;
        for (const VertexId& v : p)
            if (!set_contains(verts, v)) return false;
        const std::size_t w = std::min<std::size_t>(density, p.size());
        for (std::size_t i = 0; i + w <= p.size(); ++i) {
            VertexSet window(p.begin() + i, p.begin() + i + w);
            window = make_set(std::move(window));
            bool inside = false;
            for (const VertexSet& e : edges)
                if (set_subset(window, e)) { inside = true; break; }
            if (!inside) return false;
        }
        return true;
    };
    return enumerate_view(h.vertices, max_length, oracle, std::move(label));
}

PathComplexView nondirected_view(const DirectedHypergraph& g, int density, int max_length) {
    return hypergraph_density_view(epsilon(g), density, max_length,
                                   "nondirected(" + std::to_string(density) + ")");
}

PathComplexView natural_view(const DirectedHypergraph& g, int max_length) {
    return digraph_complex(natural(g), max_length, "natural");
}

PathComplexView theory_view(const DirectedHypergraph& g, const TheorySpec& spec, int max_length) {
    switch (spec.kind) {
        case TheoryKind::connective: return connective_view(g, spec.density, max_length);
        case TheoryKind::bold: return bold_view(g, max_length);
        case TheoryKind::nondirected: return nondirected_view(g, spec.density, max_length);
        case TheoryKind::natural: return natural_view(g, max_length);
    }
    throw std::logic_error("unreachable");
}

BettiTable theory_betti(const DirectedHypergraph& g, const TheorySpec& spec) {
    PathComplexView view = theory_view(g, spec, spec.max_dim + 1);
    BettiTable t = betti(view, spec.max_dim, spec.field);
    t.label = spec.label();
    return t;
}

std::map<VertexId, VertexId> theory_vertex_map(const DHMorphism& f, TheoryKind kind) {
    if (kind != TheoryKind::natural) return f.vertex_map;
    std::map<VertexId, VertexId> out;
    for (const VertexSet& s : p_sets(f.source).all)
        out[render_subset(s)] = render_subset(f.apply(s));
    return out;
}

} // namespace hyperpath
