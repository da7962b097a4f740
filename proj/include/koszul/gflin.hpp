#pragma once

#include <cstdint>
#include <vector>

#include "koszul/field.hpp"

namespace koszul {

// Dense row-major matrix over GF(p). Backs the degreewise linear-algebra
// oracles and the coordinate-change code. Row reduction ships in two
// variants: a serial reference and an OpenMP kernel that eliminates the
// rows below a pivot in parallel. Both use identical pivoting, so results
// are bit-identical; the parity tests and the benchmark compare them.
class FpMatrix {
public:
    FpMatrix() : rows_(0), cols_(0) {}
    FpMatrix(int rows, int cols, const PrimeField& F)
        : F_(F), rows_(rows), cols_(cols), a_((std::size_t)rows * cols, 0)
    {
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return F_; }

    std::uint32_t at(int r, int c) const { return a_[(std::size_t)r * cols_ + c]; }
    void set(int r, int c, std::uint32_t v) { a_[(std::size_t)r * cols_ + c] = v; }
    std::uint32_t* row(int r) { return a_.data() + (std::size_t)r * cols_; }
    const std::uint32_t* row(int r) const { return a_.data() + (std::size_t)r * cols_; }

    void append_row(const std::vector<std::uint32_t>& v);

    bool operator==(const FpMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    PrimeField F_;
    int rows_, cols_;
    std::vector<std::uint32_t> a_;
};

// In-place reduction to reduced row echelon form. Returns the rank and, if
// pivot_cols is non-null, the pivot column of each of the first rank rows.
int rref_serial(FpMatrix& m, std::vector<int>* pivot_cols = nullptr);
int rref_omp(FpMatrix& m, std::vector<int>* pivot_cols = nullptr);

// Dispatches on problem size / thread availability.
int rref(FpMatrix& m, std::vector<int>* pivot_cols = nullptr);

int rank(FpMatrix m);

// Is v in the row space of an already-reduced matrix?
bool in_rowspace(const FpMatrix& rref_m, const std::vector<int>& pivot_cols,
                 std::vector<std::uint32_t> v);

// Rows spanning the null space {x : m x = 0}.
FpMatrix nullspace(FpMatrix m);

} // namespace koszul
