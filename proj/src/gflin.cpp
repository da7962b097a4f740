#include "koszul/gflin.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cstring>

namespace koszul {

void FpMatrix::append_row(const std::vector<std::uint32_t>& v)
{
    if ((int)v.size() != cols_) throw InternalError("append_row: width mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

namespace {

// r_target -= c * r_src, length n
inline void row_axpy(std::uint32_t* target, const std::uint32_t* src, std::uint32_t c,
                     int n, std::uint64_t p)
{
    for (int k = 0; k < n; ++k) {
        std::uint64_t t = target[k] + (p - c) * (std::uint64_t)src[k] % p;
        target[k] = (std::uint32_t)(t >= p ? t - p : t);
    }
}

inline void row_scale(std::uint32_t* r, std::uint32_t c, int n, std::uint64_t p)
{
    for (int k = 0; k < n; ++k) r[k] = (std::uint32_t)((std::uint64_t)r[k] * c % p);
}

template <bool Parallel>
int rref_impl(FpMatrix& m, std::vector<int>* pivot_cols)
{
    const PrimeField& F = m.field();
    const std::uint64_t p = F.characteristic();
    const int nr = m.rows(), nc = m.cols();
    if (pivot_cols) pivot_cols->clear();
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int k = col; k < nc; ++k) {
                std::uint32_t t = m.at(piv, k);
                m.set(piv, k, m.at(rank, k));
                m.set(rank, k, t);
            }
        std::uint32_t inv = F.inv(m.at(rank, col));
        row_scale(m.row(rank) + col, inv, nc - col, p);
        const std::uint32_t* prow = m.row(rank);
        if constexpr (Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (int r = 0; r < nr; ++r) {
                if (r == rank) continue;
                std::uint32_t c = m.at(r, col);
                if (c) row_axpy(m.row(r) + col, prow + col, c, nc - col, p);
            }
        } else {
            for (int r = 0; r < nr; ++r) {
                if (r == rank) continue;
                std::uint32_t c = m.at(r, col);
                if (c) row_axpy(m.row(r) + col, prow + col, c, nc - col, p);
            }
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

} // namespace

int rref_serial(FpMatrix& m, std::vector<int>* pivot_cols)
{
    return rref_impl<false>(m, pivot_cols);
}

int rref_omp(FpMatrix& m, std::vector<int>* pivot_cols)
{
    return rref_impl<true>(m, pivot_cols);
}

int rref(FpMatrix& m, std::vector<int>* pivot_cols)
{
#ifdef _OPENMP
    if ((std::int64_t)m.rows() * m.cols() >= 1 << 16 && omp_get_max_threads() > 1)
        return rref_omp(m, pivot_cols);
#endif
    return rref_serial(m, pivot_cols);
}

int rank(FpMatrix m) { return rref(m); }

bool in_rowspace(const FpMatrix& rm, const std::vector<int>& pivot_cols,
                 std::vector<std::uint32_t> v)
{
    const PrimeField& F = rm.field();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
        std::uint32_t c = v[pivot_cols[i]];
        if (!c) continue;
        const std::uint32_t* r = rm.row((int)i);
        for (int k = pivot_cols[i]; k < rm.cols(); ++k) v[k] = F.sub(v[k], F.mul(c, r[k]));
    }
    for (std::uint32_t x : v)
        if (x) return false;
    return true;
}

FpMatrix nullspace(FpMatrix m)
{
    const PrimeField& F = m.field();
    std::vector<int> piv;
    int rk = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : piv) is_pivot[c] = true;
    FpMatrix basis(0, m.cols(), F);
    std::vector<std::uint32_t> v(m.cols());
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free_col] = 1;
        for (int i = 0; i < rk; ++i) v[piv[i]] = F.neg(m.at(i, free_col));
        basis.append_row(v);
    }
    return basis;
}

} // namespace koszul
