#include "support/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace hyperpath::testing {

long long det_laplace(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    if (n > 20) throw std::invalid_argument("det_laplace: matrix too large");
    // sub[mask] = det of the submatrix on rows 0..popcount-1 and columns mask.
    std::vector<long long> sub(std::size_t(1) << n, 0);
    sub[0] = 1;
    for (std::size_t mask = 1; mask < sub.size(); ++mask) {
        const int r = std::popcount(mask) - 1;
        long long acc = 0;
        int sign = 1;
        for (std::size_t j = 0, seen = 0; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            long long entry = m.at(r, j);
            if (entry != 0) {
                long long term;
                if (__builtin_mul_overflow(entry, sub[mask ^ (std::size_t(1) << j)], &term))
                    throw std::overflow_error("det_laplace overflow");
                if (sign < 0) term = -term;
                if (__builtin_add_overflow(acc, term, &acc))
                    throw std::overflow_error("det_laplace overflow");
            }
            ++seen;
            sign = -sign;
        }
        sub[mask] = acc;
    }
    return sub.back();
}

namespace {

IntMatrix submatrix(const IntMatrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
    IntMatrix s;
    s.rows = rows.size();
    s.cols = cols.size();
    s.a.resize(s.rows * s.cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = m.at(rows[i], cols[j]);
    return s;
}

} // namespace

std::size_t minor_rank(const IntMatrix& m) {
    if (std::min(m.rows, m.cols) > 12)
        throw std::invalid_argument("minor_rank: matrix too large for minor expansion");
    std::vector<std::size_t> rows, cols;
    // Grow a non-singular square submatrix while some bordering minor
    // survives; when none does, its size is the rank.
    while (true) {
        bool grown = false;
        for (std::size_t i = 0; i < m.rows && !grown; ++i) {
            if (std::find(rows.begin(), rows.end(), i) != rows.end()) continue;
            for (std::size_t j = 0; j < m.cols && !grown; ++j) {
                if (std::find(cols.begin(), cols.end(), j) != cols.end()) continue;
                auto r2 = rows;
                auto c2 = cols;
                r2.push_back(i);
                c2.push_back(j);
                if (det_laplace(submatrix(m, r2, c2)) != 0) {
                    rows = std::move(r2);
                    cols = std::move(c2);
                    grown = true;
                }
            }
        }
        if (!grown) return rows.size();
    }
}

std::size_t gauss_rank(const IntMatrix& m) {
    std::vector<std::vector<Scalar>> w(m.rows, std::vector<Scalar>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) w[i][j] = m.at(i, j);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t best = m.rows;
        Scalar best_abs = 0;
        for (std::size_t i = rank; i < m.rows; ++i) {
            Scalar abs = w[i][c] < 0 ? Scalar(-w[i][c]) : w[i][c];
            if (abs > best_abs) { best_abs = abs; best = i; }
        }
        if (best == m.rows) continue;
        std::swap(w[rank], w[best]);
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            if (w[i][c] == 0) continue;
            Scalar f = w[i][c] / w[rank][c];
            for (std::size_t j = c; j < m.cols; ++j) w[i][j] -= f * w[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::size_t oracle_rank(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (std::min(m.rows, m.cols) <= 10) return minor_rank(m);
    return gauss_rank(m);
}

std::vector<Path> all_regular_sequences(const VertexSet& v, int n) {
    std::vector<Path> out;
    std::vector<std::size_t> pick(n + 1, 0);
    while (true) {
        Path p;
        for (std::size_t k : pick) p.push_back(v[k]);
        if (is_regular(p)) out.push_back(std::move(p));
        int i = n;
        for (; i >= 0; --i) {
            if (++pick[i] < v.size()) break;
            pick[i] = 0;
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Independent copy of the alternating face sum with irregular faces dropped.
std::vector<std::pair<Path, int>> oracle_boundary(const Path& p) {
    std::vector<std::pair<Path, int>> out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        Path q;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (i != k) q.push_back(p[i]);
        bool regular = true;
        for (std::size_t i = 0; i + 1 < q.size(); ++i)
            if (q[i] == q[i + 1]) regular = false;
        if (regular && !q.empty()) out.push_back({std::move(q), k % 2 == 0 ? 1 : -1});
    }
    return out;
}

} // namespace

NaiveBetti naive_betti(const VertexSet& v, const std::function<bool(const Path&)>& allowed,
                       int max_dim) {
    NaiveBetti nb;
    std::vector<std::vector<Path>> good(max_dim + 2), bad(max_dim + 2), all(max_dim + 2);
    for (int n = 0; n <= max_dim + 1; ++n) {
        all[n] = all_regular_sequences(v, n);
        for (const Path& p : all[n])
            (allowed(p) ? good[n] : bad[n]).push_back(p);
    }
    nb.dim_omega.assign(max_dim + 2, 0);
    nb.rank_bnd.assign(max_dim + 2, 0);
    nb.dim_omega[0] = good[0].size();
    for (int n = 1; n <= max_dim + 1; ++n) {
        std::map<Path, std::size_t> bad_index, all_index;
        for (std::size_t i = 0; i < bad[n - 1].size(); ++i) bad_index[bad[n - 1][i]] = i;
        for (std::size_t i = 0; i < all[n - 1].size(); ++i) all_index[all[n - 1][i]] = i;

        IntMatrix off, full;
        off.rows = bad[n - 1].size();
        off.cols = good[n].size();
        off.a.assign(off.rows * off.cols, 0);
        full.rows = off.rows + all[n - 1].size();
        full.cols = good[n].size();
        full.a.assign(full.rows * full.cols, 0);
        for (std::size_t j = 0; j < good[n].size(); ++j) {
            for (const auto& [face, coef] : oracle_boundary(good[n][j])) {
                auto bi = bad_index.find(face);
                if (bi != bad_index.end()) off.at(bi->second, j) += coef;
                full.at(all_index.at(face) + off.rows, j) += coef;
            }
        }
        // Duplicate the off-complex rows at the top of the stacked matrix.
        for (std::size_t i = 0; i < off.rows; ++i)
            for (std::size_t j = 0; j < off.cols; ++j) full.at(i, j) = off.at(i, j);

        std::size_t r_off = oracle_rank(off);
        nb.dim_omega[n] = good[n].size() - r_off;
        nb.rank_bnd[n] = oracle_rank(full) - r_off;
    }
    for (int n = 0; n <= max_dim; ++n)
        nb.betti.push_back(nb.dim_omega[n] - nb.rank_bnd[n] - nb.rank_bnd[n + 1]);
    return nb;
}

std::size_t undirected_components(const Digraph& d) {
    std::map<VertexId, VertexId> parent;
    for (const VertexId& v : d.vertices) parent[v] = v;
    std::function<VertexId(VertexId)> find = [&](VertexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [v, w] : d.arrows) parent[find(v)] = find(w);
    std::size_t roots = 0;
    for (const VertexId& v : d.vertices)
        if (find(v) == v) ++roots;
    return roots;
}

} // namespace hyperpath::testing
