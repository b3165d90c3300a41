#include <hyperpath/pc_morphism.hpp>

#include <hyperpath/errors.hpp>

#include <algorithm>

namespace hyperpath {

Path PCMorphism::apply(const Path& p) const {
    Path out;
    out.reserve(p.size());
    for (const VertexId& v : p) out.push_back(vertex_map.at(v));
    return out;
}

PCMorphismCheck check_pc_morphism(const PathComplexView& source, const PathComplexView& target,
                                  const std::map<VertexId, VertexId>& vertex_map) {
    for (const VertexId& v : source.vertices)
        if (!vertex_map.count(v))
            throw std::invalid_argument("vertex map misses source vertex " + v);

    PCMorphismCheck res;
    const int depth = std::min(source.max_length, target.max_length);
    for (int n = 0; n <= depth; ++n) {
        for (const Path& p : source.allowed[n]) {
            Path img;
            img.reserve(p.size());
            for (const VertexId& v : p) img.push_back(vertex_map.at(v));
            bool ok = is_regular(img) ? (target.is_allowed_listed(img) || target.contains(img))
                                      : target.contains(img);
            if (!ok) {
                res.violation = p;
                res.message = "path " + path_str(p) + " maps to " + path_str(img) +
                              ", not allowed in " + target.label;
                return res;
            }
        }
    }
    res.morphism = PCMorphism{source, target, vertex_map};
    return res;
}

std::vector<DenseMatrix> induced_homology_maps(const PCMorphism& m, int max_dim,
                                               const Field& field) {
    OmegaComplex src = build_omega(m.source, max_dim, field);
    OmegaComplex tgt = build_omega(m.target, max_dim, field);

    std::vector<DenseMatrix> out;
    for (int n = 0; n <= max_dim; ++n) {
        // Chain map on allowed generators: a path maps to its image when
        // that stays regular, and to zero otherwise.
        const auto& src_gens = src.allowed[n];
        const auto& tgt_gens = tgt.allowed[n];
        DenseMatrix chain(tgt_gens.size(), src_gens.size());
        for (std::size_t j = 0; j < src_gens.size(); ++j) {
            Path img = m.apply(src_gens[j]);
            if (!is_regular(img)) continue;
            std::size_t t = path_index(tgt_gens, img);
            if (t == static_cast<std::size_t>(-1))
                throw std::logic_error("image path " + path_str(img) + " missing from " +
                                       m.target.label);
            chain.at(t, j) = 1;
        }

        DenseMatrix mapped = multiply(chain, src.omega_basis[n], field);
        auto on_omega = solve_in_span(tgt.omega_basis[n], mapped, field);
        if (!on_omega)
            throw std::logic_error("chain map does not preserve the cycle submodule in dimension " +
                                   std::to_string(n));

        DenseMatrix src_h = homology_basis(src, n);
        DenseMatrix tgt_h = homology_basis(tgt, n);
        DenseMatrix img_cycles = multiply(*on_omega, src_h, field);

        // Express image cycles in the target homology basis modulo boundaries.
        DenseMatrix hb = DenseMatrix::hstack(tgt_h, tgt.boundary[n + 1]);
        auto coords = solve_in_span(hb, img_cycles, field);
        if (!coords)
            throw std::logic_error("image cycle not expressible modulo boundaries in dimension " +
                                   std::to_string(n));
        DenseMatrix h(tgt_h.cols(), src_h.cols());
        for (std::size_t i = 0; i < tgt_h.cols(); ++i)
            for (std::size_t j = 0; j < src_h.cols(); ++j) h.at(i, j) = coords->at(i, j);
        out.push_back(std::move(h));
    }
    return out;
}

DenseMatrix induced_homology_map(const PCMorphism& m, int n, const Field& field) {
    return induced_homology_maps(m, n, field).back();
}

} // namespace hyperpath
