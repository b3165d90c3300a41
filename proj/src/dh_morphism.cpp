#include <hyperpath/dh_morphism.hpp>

#include <hyperpath/errors.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperpath {

VertexSet DHMorphism::apply(const VertexSet& s) const {
    VertexSet out;
    for (const VertexId& v : s) out.push_back(vertex_map.at(v));
    return make_set(std::move(out));
}

DHMorphismCheck check_dh_morphism(const DirectedHypergraph& g, const DirectedHypergraph& h,
                                  const std::map<VertexId, VertexId>& vertex_map) {
    for (const VertexId& v : g.vertices)
        if (!vertex_map.count(v))
            throw std::invalid_argument("vertex map misses source vertex " + v);

    DHMorphismCheck res;
    std::vector<std::size_t> edge_map;
    auto image = [&](const VertexSet& s) {
        VertexSet out;
        for (const VertexId& v : s) out.push_back(vertex_map.at(v));
        return make_set(std::move(out));
    };
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        Arrow img{image(g.edges[i].origin), image(g.edges[i].end)};
        std::size_t found = h.edges.size();
        for (std::size_t j = 0; j < h.edges.size(); ++j)
            if (h.edges[j] == img) { found = j; break; }
        if (found == h.edges.size()) {
            res.violating_arrow = i;
            res.message = "arrow " + std::to_string(i) + " maps to " + render_subset(img.origin) +
                          " -> " + render_subset(img.end) + ", which is not an arrow of the target";
            return res;
        }
        edge_map.push_back(found);
    }
    res.morphism = DHMorphism{g, h, vertex_map, std::move(edge_map)};
    return res;
}

DHMorphism identity_morphism(const DirectedHypergraph& g) {
    std::map<VertexId, VertexId> id;
    for (const VertexId& v : g.vertices) id[v] = v;
    auto check = check_dh_morphism(g, g, id);
    return *check.morphism;
}

DHMorphism compose(const DHMorphism& g, const DHMorphism& f) {
    if (!(f.target.vertices == g.source.vertices))
        throw std::invalid_argument("compose: middle objects disagree");
    std::map<VertexId, VertexId> vm;
    for (const auto& [v, w] : f.vertex_map) vm[v] = g.vertex_map.at(w);
    auto check = check_dh_morphism(f.source, g.target, vm);
    if (!check.ok()) throw std::logic_error("compose: result is not a morphism");
    return *check.morphism;
}

std::vector<DHMorphism> enumerate_morphisms(const DirectedHypergraph& g,
                                            const DirectedHypergraph& h,
                                            std::size_t cap) {
    const std::size_t nv = g.vertices.size(), nh = h.vertices.size();
    if (nh == 0) return {};
    double total = std::pow((double)nh, (double)nv);
    if (total > (double)cap)
        throw CapExceeded("morphism space has " + std::to_string((unsigned long long)total) +
                          " candidate vertex maps, above the cap of " + std::to_string(cap));

    std::vector<DHMorphism> out;
    std::vector<std::size_t> choice(nv, 0);
    while (true) {
        std::map<VertexId, VertexId> vm;
        for (std::size_t i = 0; i < nv; ++i) vm[g.vertices[i]] = h.vertices[choice[i]];
        auto check = check_dh_morphism(g, h, vm);
        if (check.ok()) out.push_back(std::move(*check.morphism));
        std::size_t i = nv;
        while (i-- > 0) {
            if (++choice[i] < nh) break;
            choice[i] = 0;
            if (i == 0) return out;
        }
        if (nv == 0) return out;
    }
}

} // namespace hyperpath
