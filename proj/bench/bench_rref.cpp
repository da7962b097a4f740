// Benchmark of the row-reduction kernels: serial reference vs the OpenMP
// elimination. Checks that both produce the identical reduced form before
// reporting timings, so this doubles as a large-input consistency test.

#include <chrono>
#include <cstdio>
#include <vector>

#include "koszul/field.hpp"
#include "koszul/gflin.hpp"
#include "koszul/rng.hpp"

using namespace koszul;

namespace {

FpMatrix random_matrix(const PrimeField& F, int rows, int cols, Rng& rng)
{
    FpMatrix m(rows, cols, F);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.set(r, c, (std::uint32_t)rng.below(F.characteristic()));
    return m;
}

bool same_matrix(const FpMatrix& a, const FpMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != b.at(r, c)) return false;
    return true;
}

} // namespace

int main()
{
    PrimeField F(32003);
    const int shapes[][2] = {{256, 256}, {512, 512}, {1024, 512}, {512, 1024}, {1024, 1024}};
    std::printf("%6s %6s %6s %12s %12s %9s %7s\n", "rows", "cols", "rank", "serial ms",
                "openmp ms", "speedup", "agree");
    bool all_agree = true;
    for (int rep = 0; rep < (int)(sizeof shapes / sizeof *shapes); ++rep) {
        Rng rng = Rng::for_trial(9000, (std::uint64_t)rep);
        int rows = shapes[rep][0], cols = shapes[rep][1];
        FpMatrix m = random_matrix(F, rows, cols, rng);

        FpMatrix ms = m;
        FpMatrix mo = m;
        int rank_s = 0, rank_o = 0;
        auto t0 = std::chrono::steady_clock::now();
        rank_s = rref_serial(ms, nullptr);
        auto t1 = std::chrono::steady_clock::now();
        rank_o = rref_omp(mo, nullptr);
        auto t2 = std::chrono::steady_clock::now();

        double serial = std::chrono::duration<double, std::milli>(t1 - t0).count();
        double omp = std::chrono::duration<double, std::milli>(t2 - t1).count();
        bool agree = rank_s == rank_o && same_matrix(ms, mo);
        all_agree = all_agree && agree;
        std::printf("%6d %6d %6d %12.2f %12.2f %8.2fx %7s\n", rows, cols, rank_s, serial,
                    omp, serial / omp, agree ? "yes" : "NO");
    }
    return all_agree ? 0 : 1;
}
