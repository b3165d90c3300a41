#include <hyperpath/path_complex.hpp>

#include <algorithm>
#include <stdexcept>

namespace hyperpath {

std::string path_str(const Path& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += " ";
        out += p[i];
    }
    return out + ")";
}

std::vector<std::pair<Path, int>> regular_boundary(const Path& p) {
    if (!is_regular(p)) throw std::invalid_argument("regular_boundary: irregular path " + path_str(p));
    std::vector<std::pair<Path, int>> terms;
    if (p.size() <= 1) return terms; // vertices have zero boundary
    int sign = 1;
    for (std::size_t k = 0; k < p.size(); ++k) {
        Path face;
        face.reserve(p.size() - 1);
        for (std::size_t i = 0; i < p.size(); ++i)
            if (i != k) face.push_back(p[i]);
        if (is_regular(face)) terms.emplace_back(std::move(face), sign);
        sign = -sign;
    }
    return terms;
}

bool PathComplexView::is_allowed_listed(const Path& p) const {
    int n = path_length(p);
    if (n < 0 || n > max_length) return false;
    const auto& list = allowed[n];
    return std::binary_search(list.begin(), list.end(), p);
}

std::size_t path_index(const std::vector<Path>& basis, const Path& p) {
    auto it = std::lower_bound(basis.begin(), basis.end(), p);
    if (it == basis.end() || *it != p) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - basis.begin());
}

PathComplexView enumerate_view(VertexSet vertices, int max_length,
                               std::function<bool(const Path&)> oracle, std::string label) {
    PathComplexView view;
    view.vertices = std::move(vertices);
    view.max_length = max_length;
    view.label = std::move(label);
    view.allowed.resize(max_length + 1);

    // Depth-first over regular extensions; the closure property of path
    // complexes guarantees no allowed path is missed by pruning at a
    // disallowed prefix.
    std::function<void(Path&)> extend = [&](Path& p) {
        int n = path_length(p);
        view.allowed[n].push_back(p);
        if (n == max_length) return;
        for (const VertexId& v : view.vertices) {
            if (v == p.back()) continue;
            p.push_back(v);
            if (oracle(p)) extend(p);
            p.pop_back();
        }
    };
    for (const VertexId& v : view.vertices) {
        Path p{v};
        if (oracle(p)) extend(p);
    }
    for (auto& list : view.allowed) std::sort(list.begin(), list.end());
    view.contains = std::move(oracle);
    return view;
}

std::vector<std::string> check_view_consistency(const PathComplexView& view) {
    std::vector<std::string> bad;
    for (int n = 0; n <= view.max_length; ++n) {
        const auto& list = view.allowed[n];
        if (!std::is_sorted(list.begin(), list.end()))
            bad.push_back(view.label + ": dimension " + std::to_string(n) + " not sorted");
        for (const Path& p : list) {
            if (!is_regular(p)) bad.push_back(view.label + ": irregular stored path " + path_str(p));
            if (!view.contains(p))
                bad.push_back(view.label + ": oracle rejects stored path " + path_str(p));
            if (n > 0) {
                Path front(p.begin() + 1, p.end());
                Path back(p.begin(), p.end() - 1);
                if (!view.is_allowed_listed(front))
                    bad.push_back(view.label + ": truncation closure fails at " + path_str(p) +
                                  " (missing " + path_str(front) + ")");
                if (!view.is_allowed_listed(back))
                    bad.push_back(view.label + ": truncation closure fails at " + path_str(p) +
                                  " (missing " + path_str(back) + ")");
            }
        }
    }
    return bad;
}

} // namespace hyperpath
