// Compares the serial and OpenMP row-reduction backends on random exact
// matrices and checks that they produce identical results.

#include <hyperpath/elimination.hpp>

#include <chrono>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hp = hyperpath;

namespace {

hp::DenseMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                  int span) {
    hp::DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = (int)(rng() % (2 * span + 1)) - span;
    return m;
}

// Entries with ~30-digit numerators, forcing the big-integer backend.
hp::DenseMatrix random_big_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    hp::DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            hp::BigInt x = 1;
            for (int k = 0; k < 4; ++k) x = x * 4294967296ull + rng();
            m.at(i, j) = hp::Scalar(x * ((rng() & 1) ? 1 : -1));
        }
    return m;
}

template <class F>
double time_one(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void run_case(const std::string& name, const hp::DenseMatrix& m, const hp::Field& field) {
    std::size_t rank_serial = 0, rank_parallel = 0;
    double ts = time_one([&] { rank_serial = hp::rank(m, field, hp::Exec::serial); });
    double tp = time_one([&] { rank_parallel = hp::rank(m, field, hp::Exec::parallel); });
    hp::RrefResult rs = hp::rref(m, field, hp::Exec::serial);
    hp::RrefResult rp = hp::rref(m, field, hp::Exec::parallel);
    bool same = rank_serial == rank_parallel && rs.rref == rp.rref &&
                rs.pivot_cols == rp.pivot_cols;
    std::cout << name << ": " << m.rows() << "x" << m.cols() << " rank=" << rank_serial
              << "  serial=" << ts << "s  parallel=" << tp << "s  speedup=" << ts / tp
              << "  identical=" << (same ? "yes" : "NO") << "\n";
    if (!same) std::exit(1);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; parallel backend falls back to serial\n";
#endif
    std::mt19937 rng(20240901);

    run_case("small-int   Q", random_int_matrix(rng, 220, 400, 3), hp::Field());
    run_case("small-int   Q", random_int_matrix(rng, 320, 320, 2), hp::Field());
    run_case("big-int     Q", random_big_matrix(rng, 60, 90), hp::Field());
    run_case("prime field  ", random_int_matrix(rng, 400, 600, 50), hp::Field::parse("Fp:10007"));
    return 0;
}
