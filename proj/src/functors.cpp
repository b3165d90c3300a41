#include <hyperpath/functors.hpp>

#include <hyperpath/errors.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hyperpath {

Digraph gamma(const DirectedHypergraph& g) {
    Digraph d;
    d.vertices = g.vertices;
    for (const Arrow& e : g.edges)
        for (const VertexId& v : e.origin)
            for (const VertexId& w : e.end) d.arrows.insert({v, w});
    return d;
}

Hypergraph epsilon(const DirectedHypergraph& g) {
    std::set<VertexSet> edges;
    for (const Arrow& e : g.edges) edges.insert(set_union(e.origin, e.end));
    Hypergraph h;
    h.vertices = g.vertices;
    h.edges.assign(edges.begin(), edges.end());
    return h;
}

Digraph natural(const DirectedHypergraph& g) {
    Digraph d;
    for (const VertexSet& s : p_sets(g).all) d.vertices.push_back(render_subset(s));
    d.vertices = make_set(std::move(d.vertices));
    for (const Arrow& e : g.edges)
        d.arrows.insert({render_subset(e.origin), render_subset(e.end)});
    return d;
}

VertexSet natural_vertex_set(const VertexId& label) {
    if (label.size() < 2 || label.front() != '{' || label.back() != '}')
        throw std::invalid_argument("not a subset label: " + label);
    VertexSet out;
    std::string cur;
    for (std::size_t i = 1; i + 1 < label.size(); ++i) {
        if (label[i] == '|') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += label[i];
        }
    }
    out.push_back(cur);
    return make_set(std::move(out));
}

PathComplexView digraph_complex(const Digraph& d, int max_length, std::string label) {
    auto arrows = d.arrows;
    auto verts = d.vertices;
    auto oracle = [arrows, verts](const Path& p) -> bool {
        if (p.empty()) return false;
        for (const VertexId& v : p)
            if (!set_contains(verts, v)) return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] != p[i + 1] && !arrows.count({p[i], p[i + 1]})) return false;
        return true;
    };
    return enumerate_view(d.vertices, max_length, oracle, std::move(label));
}

DirectedHypergraph as_directed_hypergraph(const Digraph& d) {
    DirectedHypergraph g;
    g.vertices = d.vertices;
    for (const auto& [v, w] : d.arrows) g.edges.push_back({{v}, {w}});
    return g;
}

bool digraph_connected(const Digraph& d) {
    if (d.vertices.empty()) return false;
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& [v, w] : d.arrows) {
        adj[v].push_back(w);
        adj[w].push_back(v);
    }
    std::set<VertexId> seen{d.vertices.front()};
    std::vector<VertexId> queue{d.vertices.front()};
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        for (const VertexId& w : adj[v])
            if (seen.insert(w).second) queue.push_back(w);
    }
    return seen.size() == d.vertices.size();
}

DirectedHypergraph box_product(const DirectedHypergraph& g, const Digraph& d) {
    if (!digraph_connected(d))
        throw std::invalid_argument("box product requires a connected digraph factor");
    if (d.arrows.empty())
        throw std::invalid_argument("box product requires a digraph factor with an arrow");

    DirectedHypergraph out;
    for (const VertexId& v : g.vertices)
        for (const VertexId& i : d.vertices) out.vertices.push_back(render_pair(v, i));
    out.vertices = make_set(std::move(out.vertices));

    const PSets pg = p_sets(g);
    // Digraph factor as a directed hypergraph: its origin/end subsets are
    // exactly the non-isolated singletons.
    std::set<VertexId> live;
    for (const auto& [v, w] : d.arrows) {
        live.insert(v);
        live.insert(w);
    }

    auto scaled = [](const VertexSet& s, const VertexId& i) {
        VertexSet t;
        for (const VertexId& v : s) t.push_back(render_pair(v, i));
        return make_set(std::move(t));
    };

    for (const Arrow& e : g.edges)
        for (const VertexId& c : live)
            out.edges.push_back({scaled(e.origin, c), scaled(e.end, c)});
    for (const auto& [c, cd] : d.arrows)
        for (const VertexSet& a : pg.all) out.edges.push_back({scaled(a, c), scaled(a, cd)});

    // Distinct arrows can coincide only through the second family when two
    // subsets of P01 agree; dedupe while keeping first occurrence order.
    std::vector<Arrow> dedup;
    std::set<Arrow> seen;
    for (Arrow& e : out.edges)
        if (seen.insert(e).second) dedup.push_back(std::move(e));
    out.edges = std::move(dedup);
    return out;
}

Hypergraph hypergraph_product(const Hypergraph& x, const Hypergraph& y) {
    Hypergraph out;
    for (const VertexId& v : x.vertices)
        for (const VertexId& w : y.vertices) out.vertices.push_back(render_pair(v, w));
    out.vertices = make_set(std::move(out.vertices));

    std::set<VertexSet> edges;
    for (const VertexSet& ex : x.edges) {
        for (const VertexSet& ey : y.edges) {
            const std::size_t cells = ex.size() * ey.size();
            if (cells > 20)
                throw CapExceeded("hypergraph product: edge candidate with 2^" +
                                  std::to_string(cells) + " subsets exceeds the 2^20 guard");
            // Enumerate subsets of ex x ey; keep those projecting onto both.
            std::vector<std::pair<VertexId, VertexId>> cell;
            for (const VertexId& a : ex)
                for (const VertexId& b : ey) cell.push_back({a, b});
            for (std::size_t mask = 1; mask < (std::size_t(1) << cells); ++mask) {
                VertexSet p1, p2, edge;
                for (std::size_t k = 0; k < cells; ++k) {
                    if (!(mask >> k & 1)) continue;
                    p1.push_back(cell[k].first);
                    p2.push_back(cell[k].second);
                    edge.push_back(render_pair(cell[k].first, cell[k].second));
                }
                if (make_set(std::move(p1)) == ex && make_set(std::move(p2)) == ey)
                    edges.insert(make_set(std::move(edge)));
            }
        }
    }
    out.edges.assign(edges.begin(), edges.end());
    return out;
}

} // namespace hyperpath
