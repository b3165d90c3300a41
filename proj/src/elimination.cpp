#include <hyperpath/elimination.hpp>

#include <atomic>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperpath {

namespace {

Exec g_default_exec = Exec::parallel;

// ---------------------------------------------------------------------------
// Forward pass: fraction-free row echelon, pivot = first non-zero entry of
// each column. The pivot sequence is identical in every arithmetic domain,
// so rank, pivot columns, and the final RREF do not depend on the backend
// or on the execution policy.
// ---------------------------------------------------------------------------

// Exact machine integers; flags overflow so the caller can retry big.
struct Int64Domain {
    using value_type = std::int64_t;
    std::atomic<bool> failed{false};
    value_type prev = 1;

    static bool fits(const BigInt& x) {
        static const BigInt lo = std::numeric_limits<std::int64_t>::min();
        static const BigInt hi = std::numeric_limits<std::int64_t>::max();
        return x >= lo && x <= hi;
    }
    bool is_zero(value_type v) const { return v == 0; }
    void begin_step(value_type prev_pivot) { prev = prev_pivot; }
    value_type update(value_type piv, value_type mij, value_type mult, value_type mrj) {
        __int128 t = (__int128)piv * mij - (__int128)mult * mrj;
        if (t % prev != 0) { failed.store(true, std::memory_order_relaxed); return 0; }
        __int128 q = t / prev;
        if (q > std::numeric_limits<std::int64_t>::max() ||
            q < std::numeric_limits<std::int64_t>::min()) {
            failed.store(true, std::memory_order_relaxed);
            return 0;
        }
        return (value_type)q;
    }
};

// Exact integers, arbitrary precision. The fraction-free update divides
// exactly, so entries stay integral.
struct BigDomain {
    using value_type = BigInt;
    std::atomic<bool> failed{false};
    BigInt prev = 1;

    bool is_zero(const value_type& v) const { return v == 0; }
    void begin_step(const value_type& prev_pivot) { prev = prev_pivot; }
    value_type update(const value_type& piv, const value_type& mij, const value_type& mult,
                      const value_type& mrj) const {
        return (piv * mij - mult * mrj) / prev;
    }
};

// Residues mod p for p < 2^31: every product fits a signed 64-bit word.
struct Int64ModDomain {
    using value_type = std::int64_t;
    std::int64_t p;
    std::int64_t prev_inv = 1;
    std::atomic<bool> failed{false};

    explicit Int64ModDomain(std::int64_t p_) : p(p_) {}
    bool is_zero(value_type v) const { return v == 0; }
    value_type inv(value_type a) const {
        value_type t = 0, newt = 1, r = p, newr = a % p;
        while (newr != 0) {
            value_type q = r / newr;
            t -= q * newt; std::swap(t, newt);
            r -= q * newr; std::swap(r, newr);
        }
        return ((t % p) + p) % p;
    }
    void begin_step(value_type prev_pivot) { prev_inv = inv(prev_pivot); }
    value_type update(value_type piv, value_type mij, value_type mult, value_type mrj) const {
        value_type t = ((piv % p) * mij - (mult % p) * mrj) % p;
        if (t < 0) t += p;
        return (t * prev_inv) % p;
    }
};

// Residues mod p, arbitrary precision.
struct BigModDomain {
    using value_type = BigInt;
    BigInt p;
    BigInt prev_inv = 1;
    std::atomic<bool> failed{false};

    explicit BigModDomain(BigInt p_) : p(std::move(p_)) {}
    bool is_zero(const value_type& v) const { return v == 0; }
    value_type inv(const value_type& a) const {
        value_type t = 0, newt = 1, r = p, newr = a % p;
        while (newr != 0) {
            value_type q = r / newr;
            t -= q * newt; std::swap(t, newt);
            r -= q * newr; std::swap(r, newr);
        }
        return ((t % p) + p) % p;
    }
    void begin_step(const value_type& prev_pivot) { prev_inv = inv(prev_pivot); }
    value_type update(const value_type& piv, const value_type& mij, const value_type& mult,
                      const value_type& mrj) const {
        value_type t = (piv * mij - mult * mrj) % p;
        if (t < 0) t += p;
        return (t * prev_inv) % p;
    }
};

template <class Dom>
std::vector<std::size_t> forward_echelon(Dom& dom, std::vector<typename Dom::value_type>& m,
                                         std::size_t rows, std::size_t cols, Exec exec) {
    using V = typename Dom::value_type;
    std::vector<std::size_t> pivot_cols;
    V prev{1};
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv_row = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!dom.is_zero(m[i * cols + c])) { piv_row = i; break; }
        }
        if (piv_row == rows) continue;
        if (piv_row != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[r * cols + j], m[piv_row * cols + j]);
        const V piv = m[r * cols + c];
        dom.begin_step(prev);

        const auto update_row = [&](std::size_t i) {
            const V mult = m[i * cols + c];
            for (std::size_t j = c; j < cols; ++j)
                m[i * cols + j] = dom.update(piv, m[i * cols + j], mult, m[r * cols + j]);
        };
        if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
            for (std::size_t i = r + 1; i < rows; ++i) update_row(i);
        } else {
            for (std::size_t i = r + 1; i < rows; ++i) update_row(i);
        }
        if (dom.failed.load(std::memory_order_relaxed)) return pivot_cols;

        prev = piv;
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

// Clears denominators row by row. Row scaling changes neither the row space
// nor the null space, so rank, RREF, and kernels are unaffected.
std::vector<BigInt> to_integer_rows(const DenseMatrix& m) {
    std::vector<BigInt> out(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            BigInt d = scalar_den(m.at(i, j));
            l = l / boost::multiprecision::gcd(l, d) * d;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& s = m.at(i, j);
            out[i * m.cols() + j] = scalar_num(s) * (l / scalar_den(s));
        }
    }
    return out;
}

struct ForwardOutcome {
    std::vector<std::size_t> pivot_cols;
    DenseMatrix echelon; // filled only when requested
};

template <class V>
DenseMatrix to_dense(const std::vector<V>& w, std::size_t rows, std::size_t cols) {
    DenseMatrix d(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) d.at(i, j) = w[i * cols + j];
    return d;
}

ForwardOutcome run_forward(const DenseMatrix& m, const Field& field, Exec exec,
                           bool want_matrix) {
    const std::size_t rows = m.rows(), cols = m.cols();
    ForwardOutcome out;

    if (field.is_prime_field()) {
        if (field.modulus() < BigInt(1) << 31) {
            std::vector<std::int64_t> w(rows * cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    w[i * cols + j] = (std::int64_t)scalar_num(field.canon(m.at(i, j)));
            Int64ModDomain dom((std::int64_t)field.modulus());
            out.pivot_cols = forward_echelon(dom, w, rows, cols, exec);
            if (want_matrix) out.echelon = to_dense(w, rows, cols);
        } else {
            std::vector<BigInt> w(rows * cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    w[i * cols + j] = scalar_num(field.canon(m.at(i, j)));
            BigModDomain dom(field.modulus());
            out.pivot_cols = forward_echelon(dom, w, rows, cols, exec);
            if (want_matrix) out.echelon = to_dense(w, rows, cols);
        }
        return out;
    }

    std::vector<BigInt> ints = to_integer_rows(m);
    bool small = true;
    for (const auto& x : ints)
        if (!Int64Domain::fits(x)) { small = false; break; }

    if (small) {
        std::vector<std::int64_t> w(ints.size());
        for (std::size_t k = 0; k < ints.size(); ++k) w[k] = (std::int64_t)ints[k];
        Int64Domain dom;
        auto piv = forward_echelon(dom, w, rows, cols, exec);
        if (!dom.failed.load()) {
            out.pivot_cols = std::move(piv);
            if (want_matrix) out.echelon = to_dense(w, rows, cols);
            return out;
        }
    }

    BigDomain dom;
    out.pivot_cols = forward_echelon(dom, ints, rows, cols, exec);
    if (want_matrix) out.echelon = to_dense(ints, rows, cols);
    return out;
}

} // namespace

Exec default_exec() { return g_default_exec; }
void set_default_exec(Exec e) { g_default_exec = e; }

std::size_t rank(const DenseMatrix& m, const Field& field, Exec exec) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return run_forward(m, field, exec, false).pivot_cols.size();
}

RrefResult rref(const DenseMatrix& m, const Field& field, Exec exec) {
    if (m.rows() == 0 || m.cols() == 0) return {m, {}};
    ForwardOutcome fwd = run_forward(m, field, exec, true);
    DenseMatrix& r = fwd.echelon;
    const auto& pivots = fwd.pivot_cols;
    const std::size_t cols = m.cols();

    // Jordan phase: normalize pivots to 1 and clear entries above them.
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t pc = pivots[k];
        Scalar piv = r.at(k, pc);
        for (std::size_t j = pc; j < cols; ++j)
            if (r.at(k, j) != 0) r.at(k, j) = field.div(r.at(k, j), piv);
        const auto clear_row = [&](std::size_t i) {
            Scalar f = r.at(i, pc);
            if (f == 0) return;
            for (std::size_t j = pc; j < cols; ++j)
                if (r.at(k, j) != 0) r.at(i, j) = field.sub(r.at(i, j), field.mul(f, r.at(k, j)));
        };
        if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (std::size_t i = 0; i < k; ++i) clear_row(i);
        } else {
            for (std::size_t i = 0; i < k; ++i) clear_row(i);
        }
    }
    for (std::size_t i = pivots.size(); i < r.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) r.at(i, j) = 0;
    return {std::move(r), fwd.pivot_cols};
}

DenseMatrix kernel_basis(const DenseMatrix& m, const Field& field, Exec exec) {
    const std::size_t cols = m.cols();
    if (m.rows() == 0) return DenseMatrix::identity(cols);
    RrefResult rr = rref(m, field, exec);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

    DenseMatrix k(cols, cols - rr.pivot_cols.size());
    std::size_t out = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        k.at(f, out) = 1;
        for (std::size_t pr = 0; pr < rr.pivot_cols.size(); ++pr)
            k.at(rr.pivot_cols[pr], out) = field.neg(rr.rref.at(pr, f));
        ++out;
    }
    return k;
}

std::optional<DenseMatrix> solve_in_span(const DenseMatrix& basis, const DenseMatrix& targets,
                                         const Field& field, Exec exec) {
    if (basis.rows() != targets.rows())
        throw std::invalid_argument("solve_in_span: dimension mismatch");
    const std::size_t b = basis.cols(), t = targets.cols();
    if (t == 0) return DenseMatrix(b, 0);
    if (basis.rows() == 0) return DenseMatrix(b, t); // 0-dim ambient space: all zero
    RrefResult rr = rref(DenseMatrix::hstack(basis, targets), field, exec);
    for (std::size_t c : rr.pivot_cols)
        if (c >= b) return std::nullopt; // that target column is independent of the basis
    DenseMatrix x(b, t);
    for (std::size_t pr = 0; pr < rr.pivot_cols.size(); ++pr)
        for (std::size_t j = 0; j < t; ++j) x.at(rr.pivot_cols[pr], j) = rr.rref.at(pr, b + j);
    return x;
}

std::optional<std::vector<Scalar>> solve_in_span(const std::vector<std::vector<Scalar>>& basis,
                                                 const std::vector<Scalar>& target,
                                                 const Field& field, Exec exec) {
    const std::size_t n = target.size();
    for (const auto& v : basis)
        if (v.size() != n) throw std::invalid_argument("solve_in_span: dimension mismatch");
    DenseMatrix b(n, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) b.at(i, j) = basis[j][i];
    DenseMatrix t(n, 1);
    for (std::size_t i = 0; i < n; ++i) t.at(i, 0) = target[i];
    auto x = solve_in_span(b, t, field, exec);
    if (!x) return std::nullopt;
    return x->column(0);
}

} // namespace hyperpath
