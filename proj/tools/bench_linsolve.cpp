// Compares the OpenMP elimination kernel against the serial reference on
// random sparse systems and on an ansatz-sized instance.
#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "bsato/ansatz.hpp"
#include "bsato/linsolve.hpp"

using namespace bsato;

namespace {

SparseMat random_system(std::size_t rows, std::size_t cols, double density,
                        std::mt19937_64& rng) {
    SparseMat m;
    m.ncols = static_cast<long>(cols);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> val(-20, 20);
    for (std::size_t r = 0; r < rows; ++r) {
        SparseVec row;
        for (std::size_t c = 0; c < cols; ++c) {
            if (coin(rng) < density) {
                int v = val(rng);
                if (v != 0) row.emplace_back(static_cast<long>(c), Rat(v));
            }
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", omp_get_max_threads());

    std::mt19937_64 rng(42);
    for (auto [rows, cols, density] :
         {std::tuple{400UL, 300UL, 0.08}, std::tuple{900UL, 700UL, 0.05}}) {
        SparseMat m = random_system(rows, cols, density, rng);
        RrefResult a, b;
        double t_par = time_ms([&] { a = rref(m); });
        double t_ser = time_ms([&] { b = rref_serial(m); });
        bool same = a.rows == b.rows && a.pivot_col == b.pivot_col;
        std::printf("random %4zux%-4zu d=%.2f  omp %8.1f ms   serial %8.1f ms   agree: %s\n",
                    rows, cols, density, t_par, t_ser, same ? "yes" : "NO");
        if (!same) return 1;
    }

    // ansatz-shaped workload: functional equation search for x^2+y^3
    auto ring = make_ring({"x", "y"});
    MPoly f = mpoly_parse("x^2+y^3", ring);
    AnsatzBounds bounds{3, 3, 3};
    double t = time_ms([&] {
        auto cert = search(f, bounds);
        if (!cert) std::printf("unexpected: no certificate\n");
    });
    std::printf("ansatz search x^2+y^3 (3,3,3): %.1f ms\n", t);
    return 0;
}
