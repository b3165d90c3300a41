#include <hyperpath/cylinder.hpp>

#include <algorithm>
#include <stdexcept>

namespace hyperpath {

VertexId prime(const VertexId& v) { return v + "'"; }

bool is_primed(const VertexId& v) { return !v.empty() && v.back() == '\''; }

VertexId unprime(const VertexId& v) {
    if (!is_primed(v)) throw std::invalid_argument("unprime: " + v + " is not primed");
    return v.substr(0, v.size() - 1);
}

PathComplexView cylinder(const PathComplexView& view) {
    PathComplexView cyl;
    cyl.max_length = view.max_length;
    cyl.label = view.label + "-cylinder";
    VertexSet verts = view.vertices;
    for (const VertexId& v : view.vertices) verts.push_back(prime(v));
    cyl.vertices = make_set(std::move(verts));
    cyl.allowed.resize(cyl.max_length + 1);

    for (int n = 0; n <= view.max_length; ++n) {
        for (const Path& p : view.allowed[n]) {
            cyl.allowed[n].push_back(p);
            Path primed;
            for (const VertexId& v : p) primed.push_back(prime(v));
            cyl.allowed[n].push_back(std::move(primed));
        }
        // Jump paths: one per vertex position of each length-(n-1) source path.
        if (n >= 1) {
            for (const Path& p : view.allowed[n - 1]) {
                for (std::size_t k = 0; k < p.size(); ++k) {
                    Path q(p.begin(), p.begin() + k + 1);
                    for (std::size_t i = k; i < p.size(); ++i) q.push_back(prime(p[i]));
                    cyl.allowed[n].push_back(std::move(q));
                }
            }
        }
    }
    for (auto& list : cyl.allowed) std::sort(list.begin(), list.end());

    auto base = view.contains;
    cyl.contains = [base](const Path& p) -> bool {
        if (p.empty()) return false;
        // Locate the level transition; primed may never precede unprimed.
        std::size_t first_primed = p.size();
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (is_primed(p[i])) { first_primed = i; break; }
        }
        for (std::size_t i = first_primed; i < p.size(); ++i)
            if (!is_primed(p[i])) return false;
        if (first_primed == p.size()) return base(p);
        if (first_primed == 0) {
            Path low;
            for (const VertexId& v : p) low.push_back(unprime(v));
            return base(low);
        }
        // Mixed: the jump must duplicate the transition vertex.
        if (unprime(p[first_primed]) != p[first_primed - 1]) return false;
        Path merged(p.begin(), p.begin() + first_primed);
        for (std::size_t i = first_primed + 1; i < p.size(); ++i)
            merged.push_back(unprime(p[i]));
        return base(merged);
    };
    return cyl;
}

} // namespace hyperpath
