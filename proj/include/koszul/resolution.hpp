#pragma once

#include <map>
#include <optional>
#include <vector>

#include "koszul/module.hpp"

namespace koszul {

// Matrix of homogeneous polynomials; column c is the image of the c-th
// source generator in target coordinates.
struct PolyMatrix {
    int nrows = 0, ncols = 0;
    std::vector<Poly> a; // row-major

    PolyMatrix() = default;
    PolyMatrix(int r, int c) : nrows(r), ncols(c), a((std::size_t)r * c) {}

    Poly& at(int r, int c) { return a[(std::size_t)r * ncols + c]; }
    const Poly& at(int r, int c) const { return a[(std::size_t)r * ncols + c]; }
};

PolyMatrix matrix_from_columns(const PolyRing& R, int tgt_rank,
                               const std::vector<FreeElem>& cols);
FreeElem matrix_column(const PolyRing& R, const PolyMatrix& m, int c);

// Chain complex of graded free modules over S/quotient (quotient empty = S):
// diffs[k] maps mods[k+1] to mods[k].
struct GradedComplex {
    PolyRing ring;
    Ideal quotient;
    std::vector<FreeModule> mods;
    std::vector<PolyMatrix> diffs;

    int length() const { return (int)mods.size() - 1; }
};

// entries homogeneous of the right degrees and d.d = 0 (mod the quotient)
void check_complex(const GradedComplex& C);

// Iterated syzygies under induced orders; not minimal. Input must live over
// the polynomial ring itself.
GradedComplex schreyer_resolution(const PresentedModule& M);

// Split off all unit entries; turns any resolution into the minimal one.
GradedComplex minimalize(GradedComplex C);

GradedComplex minimal_resolution(const PresentedModule& M);

struct BettiTable {
    std::optional<int> cutoff; // homological truncation, nullopt = complete
    std::map<std::pair<int, int>, long long> entries; // (i, internal degree) -> rank
};

BettiTable betti_from_complex(const GradedComplex& C, std::optional<int> cutoff);
BettiTable betti_table(const PresentedModule& M);

RegValue regularity_of_betti(const BettiTable& B);
// Castelnuovo-Mumford regularity over S (quotient modules are resolved as
// S-modules)
RegValue regularity(const PresentedModule& M);

// all generators in one degree d and beta_{i,j} = 0 unless j = d + i
bool betti_is_linear(const BettiTable& B);
bool has_linear_resolution(const PresentedModule& M);

// Numerator of the Hilbert series over (1-t)^n. Computed from any free
// resolution via the alternating sum, so the non-minimal one suffices.
struct HilbertSeries {
    int nvars = 0;
    std::map<int, long long> numer;
};

HilbertSeries hilbert_series(const PresentedModule& M);
long long hilbert_function(const HilbertSeries& H, int d);
int krull_dim_of(const HilbertSeries& H); // -1 for the zero module
int krull_dim(const PresentedModule& M);
bool is_finite_length(const PresentedModule& M);
// largest degree with a nonzero piece; throws NotFiniteLength otherwise
RegValue top_degree(const PresentedModule& M);

// Resolutions over a hypersurface ring R = S/(f) are generally infinite, so
// everything is computed through homological degree `cutoff`. Internally one
// extra step is resolved so that minimalization at the boundary cannot
// distort the reported range.
GradedComplex resolution_over_hypersurface(const PresentedModule& M, int cutoff);
BettiTable betti_over_hypersurface(const PresentedModule& M, int cutoff);

struct TruncatedReg {
    RegValue value;    // max (j - i) seen up to the cutoff
    bool stabilized;   // top strand constant over the tail window, cutoff >= 4
};
TruncatedReg regularity_over_hypersurface(const PresentedModule& M, int cutoff);

} // namespace koszul
