#include <hyperpath/homotopy.hpp>

#include <hyperpath/errors.hpp>

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hyperpath {

Digraph line_digraph(const std::vector<bool>& orientations) {
    Digraph d;
    for (std::size_t i = 0; i <= orientations.size(); ++i)
        d.vertices.push_back(std::to_string(i));
    d.vertices = make_set(std::move(d.vertices));
    for (std::size_t i = 0; i < orientations.size(); ++i) {
        std::string a = std::to_string(i), b = std::to_string(i + 1);
        if (orientations[i])
            d.arrows.insert({a, b});
        else
            d.arrows.insert({b, a});
    }
    return d;
}

namespace {

// The interval with one arrow; forward: 0 -> 1.
Digraph interval(bool forward) { return line_digraph({forward}); }

std::optional<DHMorphism> box_homotopy(const DHMorphism& f0, const DHMorphism& f1, bool forward) {
    const DirectedHypergraph& g = f0.source;
    DirectedHypergraph box = box_product(g, interval(forward));
    std::map<VertexId, VertexId> vm;
    for (const VertexId& v : g.vertices) {
        vm[render_pair(v, "0")] = f0.vertex_map.at(v);
        vm[render_pair(v, "1")] = f1.vertex_map.at(v);
    }
    auto check = check_dh_morphism(box, f0.target, vm);
    if (!check.ok()) return std::nullopt;
    return *check.morphism;
}

} // namespace

std::optional<HomotopyStep> one_step_homotopic(const DHMorphism& f0, const DHMorphism& f1) {
    if (!(f0.source.vertices == f1.source.vertices) || !(f0.target.vertices == f1.target.vertices))
        throw std::invalid_argument("one_step_homotopic: sources or targets disagree");
    for (bool forward : {true, false}) {
        auto box = box_homotopy(f0, f1, forward);
        if (box) return HomotopyStep{f0, f1, forward, std::move(*box)};
    }
    return std::nullopt;
}

std::optional<HomotopyWitness> homotopic(const DHMorphism& f, const DHMorphism& g,
                                         const HomotopySearchCaps& caps) {
    if (!(f.source.vertices == g.source.vertices) || !(f.target.vertices == g.target.vertices))
        throw std::invalid_argument("homotopic: sources or targets disagree");
    if (f.same_map(g)) return HomotopyWitness{};

    std::vector<DHMorphism> space = enumerate_morphisms(f.source, f.target, caps.morphism_cap);
    auto index_of = [&](const DHMorphism& m) {
        for (std::size_t i = 0; i < space.size(); ++i)
            if (space[i].same_map(m)) return i;
        throw std::logic_error("morphism not in enumerated space");
    };
    const std::size_t start = index_of(f), goal = index_of(g);

    // Edges are probed lazily; the step search is symmetric because a
    // reversed interval realizes the reversed move.
    std::vector<std::optional<std::size_t>> parent_of(space.size());
    std::vector<std::optional<HomotopyStep>> step_to(space.size());
    std::vector<std::size_t> depth(space.size(), 0);
    std::vector<bool> seen(space.size(), false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;

    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        if (cur == goal) break;
        if (depth[cur] == caps.max_steps) continue;
        for (std::size_t next = 0; next < space.size(); ++next) {
            if (seen[next]) continue;
            auto step = one_step_homotopic(space[cur], space[next]);
            if (!step) continue;
            seen[next] = true;
            parent_of[next] = cur;
            step_to[next] = std::move(*step);
            depth[next] = depth[cur] + 1;
            queue.push_back(next);
        }
    }
    if (!seen[goal]) return std::nullopt;

    HomotopyWitness w;
    for (std::size_t at = goal; parent_of[at]; at = *parent_of[at])
        w.steps.push_back(*step_to[at]);
    if (!parent_of[goal] && goal != start) return std::nullopt;
    std::reverse(w.steps.begin(), w.steps.end());
    return w;
}

std::optional<HomotopyEquivalence> homotopy_equivalent(const DirectedHypergraph& g,
                                                       const DirectedHypergraph& h,
                                                       const HomotopySearchCaps& caps) {
    std::vector<DHMorphism> gh = enumerate_morphisms(g, h, caps.morphism_cap);
    std::vector<DHMorphism> hg = enumerate_morphisms(h, g, caps.morphism_cap);
    if (gh.empty() || hg.empty()) return std::nullopt;
    DHMorphism idg = identity_morphism(g);
    DHMorphism idh = identity_morphism(h);
    for (const DHMorphism& f : gh) {
        for (const DHMorphism& back : hg) {
            auto w1 = homotopic(compose(back, f), idg, caps);
            if (!w1) continue;
            auto w2 = homotopic(compose(f, back), idh, caps);
            if (!w2) continue;
            return HomotopyEquivalence{f, back, std::move(*w1), std::move(*w2)};
        }
    }
    return std::nullopt;
}

bool verify_witness(const HomotopyWitness& w, const DHMorphism& f, const DHMorphism& g) {
    if (w.steps.empty()) return f.same_map(g);
    if (!w.steps.front().from.same_map(f) || !w.steps.back().to.same_map(g)) return false;
    for (std::size_t i = 0; i + 1 < w.steps.size(); ++i)
        if (!w.steps[i].to.same_map(w.steps[i + 1].from)) return false;
    for (const HomotopyStep& s : w.steps) {
        DirectedHypergraph box = box_product(s.from.source, interval(s.forward_interval));
        auto check = check_dh_morphism(box, s.from.target, s.box_morphism.vertex_map);
        if (!check.ok()) return false;
        // The two ends of the box morphism must restrict to the step's
        // endpoints.
        for (const VertexId& v : s.from.source.vertices) {
            if (s.box_morphism.vertex_map.at(render_pair(v, "0")) != s.from.vertex_map.at(v))
                return false;
            if (s.box_morphism.vertex_map.at(render_pair(v, "1")) != s.to.vertex_map.at(v))
                return false;
        }
    }
    return true;
}

} // namespace hyperpath
