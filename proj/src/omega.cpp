#include <hyperpath/omega.hpp>

#include <hyperpath/errors.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace hyperpath {

RawChainComplex build_raw_complex(const PathComplexView& view, int depth) {
    if (view.max_length < depth)
        throw TruncationError(view.label + ": enumerated to length " +
                              std::to_string(view.max_length) + ", need " + std::to_string(depth));
    RawChainComplex raw;
    raw.depth = depth;
    raw.allowed.resize(depth + 1);
    raw.nonallowed.resize(depth + 1);
    raw.bnd_allowed.resize(depth + 1);
    raw.bnd_nonallowed.resize(depth + 1);
    for (int n = 0; n <= depth; ++n) raw.allowed[n] = view.allowed[n];

    for (int n = 1; n <= depth; ++n) {
        const auto& gens = raw.allowed[n];
        const auto& targets = raw.allowed[n - 1];
        // Collect the non-allowed faces first so the row order is canonical.
        std::map<Path, std::size_t> extra;
        std::vector<std::vector<std::pair<Path, int>>> faces(gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) {
            faces[j] = regular_boundary(gens[j]);
            for (const auto& [face, coef] : faces[j]) {
                (void)coef;
                if (path_index(targets, face) == static_cast<std::size_t>(-1)) extra.emplace(face, 0);
            }
        }
        std::size_t idx = 0;
        for (auto& [path, slot] : extra) {
            raw.nonallowed[n - 1].push_back(path);
            slot = idx++;
        }
        DenseMatrix a(targets.size(), gens.size());
        DenseMatrix na(extra.size(), gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) {
            for (const auto& [face, coef] : faces[j]) {
                std::size_t t = path_index(targets, face);
                if (t != static_cast<std::size_t>(-1))
                    a.at(t, j) += coef;
                else
                    na.at(extra.at(face), j) += coef;
            }
        }
        raw.bnd_allowed[n] = std::move(a);
        raw.bnd_nonallowed[n] = std::move(na);
    }
    raw.bnd_allowed[0] = DenseMatrix(0, raw.allowed[0].size());
    raw.bnd_nonallowed[0] = DenseMatrix(0, raw.allowed[0].size());
    return raw;
}

OmegaComplex build_omega(const PathComplexView& view, int max_dim, const Field& field) {
    RawChainComplex raw = build_raw_complex(view, max_dim + 1);
    OmegaComplex oc;
    oc.field = field;
    oc.max_dim = max_dim;
    oc.allowed = raw.allowed;
    oc.omega_basis.resize(max_dim + 2);
    oc.boundary.resize(max_dim + 2);

    // Dimension 0 carries every allowed vertex and a zero boundary.
    oc.omega_basis[0] = DenseMatrix::identity(raw.allowed[0].size());
    oc.boundary[0] = DenseMatrix(0, raw.allowed[0].size());

    for (int n = 1; n <= max_dim + 1; ++n) {
        oc.omega_basis[n] = kernel_basis(raw.bnd_nonallowed[n], field);
        // Boundaries of basis vectors, over allowed (n-1)-paths.
        DenseMatrix img = multiply(raw.bnd_allowed[n], oc.omega_basis[n], field);
        auto expressed = solve_in_span(oc.omega_basis[n - 1], img, field);
        if (!expressed)
            throw std::logic_error(view.label +
                                   ": boundary left the cycle submodule in dimension " +
                                   std::to_string(n));
        oc.boundary[n] = std::move(*expressed);
    }
    return oc;
}

namespace {

std::vector<std::size_t> chain_ranks(const RawChainComplex& raw, const Field& field,
                                     std::vector<std::size_t>& dim_omega) {
    // rank of the boundary restricted to ker(bnd_nonallowed), via
    // rank([P; D]) - rank(P) = dim D(ker P).
    std::vector<std::size_t> rank_bnd(raw.depth + 1, 0);
    dim_omega.assign(raw.depth + 1, 0);
    dim_omega[0] = raw.allowed[0].size();
    for (int n = 1; n <= raw.depth; ++n) {
        std::size_t rp = rank(raw.bnd_nonallowed[n], field);
        dim_omega[n] = raw.allowed[n].size() - rp;
        std::size_t rs = rank(DenseMatrix::vstack(raw.bnd_nonallowed[n], raw.bnd_allowed[n]), field);
        rank_bnd[n] = rs - rp;
    }
    return rank_bnd;
}

} // namespace

BettiTable betti(const PathComplexView& view, int max_dim, const Field& field) {
    RawChainComplex raw = build_raw_complex(view, max_dim + 1);
    BettiTable t;
    t.label = view.label;
    t.field_name = field.name();
    t.max_dim = max_dim;
    t.length_bound = view.max_length;
    t.rank_boundary = chain_ranks(raw, field, t.dim_omega);
    for (int n = 0; n <= max_dim; ++n)
        t.betti.push_back(t.dim_omega[n] - t.rank_boundary[n] - t.rank_boundary[n + 1]);
    return t;
}

BettiTable betti_of(const OmegaComplex& oc, const PathComplexView& view) {
    BettiTable t;
    t.label = view.label;
    t.field_name = oc.field.name();
    t.max_dim = oc.max_dim;
    t.length_bound = view.max_length;
    for (int n = 0; n <= oc.max_dim + 1; ++n) {
        t.dim_omega.push_back(oc.dim(n));
        t.rank_boundary.push_back(rank(oc.boundary[n], oc.field));
    }
    for (int n = 0; n <= oc.max_dim; ++n)
        t.betti.push_back(t.dim_omega[n] - t.rank_boundary[n] - t.rank_boundary[n + 1]);
    return t;
}

DenseMatrix homology_basis(const OmegaComplex& oc, int n) {
    const DenseMatrix kern = kernel_basis(oc.boundary[n], oc.field);
    const DenseMatrix& img = oc.boundary[n + 1];
    // Pivot columns of [image | kernel] inside the kernel block are exactly
    // the greedy choice of kernel vectors independent of the image.
    RrefResult rr = rref(DenseMatrix::hstack(img, kern), oc.field);
    DenseMatrix reps(oc.dim(n), 0);
    std::vector<std::size_t> chosen;
    for (std::size_t c : rr.pivot_cols)
        if (c >= img.cols()) chosen.push_back(c - img.cols());
    DenseMatrix out(oc.dim(n), chosen.size());
    for (std::size_t j = 0; j < chosen.size(); ++j)
        for (std::size_t i = 0; i < oc.dim(n); ++i) out.at(i, j) = kern.at(i, chosen[j]);
    return out;
}

std::string BettiTable::to_string() const {
    std::ostringstream os;
    os << label << "  field=" << field_name << "  max-dim=" << max_dim
       << "  length-bound=" << length_bound << "\n";
    os << "  n    dim(Omega_n)  rank(bnd_n)  betti_n\n";
    for (int n = 0; n <= max_dim + 1; ++n) {
        os << "  " << n << "    " << dim_omega[n] << "            " << rank_boundary[n];
        if (n <= max_dim)
            os << "            " << betti[n];
        os << "\n";
    }
    return os.str();
}

} // namespace hyperpath
